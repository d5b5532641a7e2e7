#include "rfso/rf_channel.hpp"

#include <cmath>

#include "rfso/errors.hpp"
#include "rfso/gamma.hpp"

namespace rfso {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

RfFadingParams RfFadingParams::from_db(double alpha, double eta, double mu,
                                       double omega_db) {
    RfFadingParams p{alpha, eta, mu, db_to_linear(omega_db)};
    p.validate();
    return p;
}

void RfFadingParams::validate() const {
    if (!(alpha > 0.0)) throw DomainError("RfFadingParams: alpha must be > 0");
    if (!(mu >= 0.5)) throw DomainError("RfFadingParams: mu must be >= 0.5");
    if (!(omega > 0.0)) throw DomainError("RfFadingParams: omega must be > 0");
    if (!(eta > 0.0)) throw DomainError("RfFadingParams: eta must be > 0");
    if (std::abs(eta - 1.0) < 1e-6)
        throw DomainError(
            "RfFadingParams: |eta - 1| must be >= 1e-6 (use e.g. 1.0001 for "
            "eta -> 1)");
}

RfLink::RfLink(const RfFadingParams& p, const Precision& prec)
    : p_(p), prec_(prec) {
    p_.validate();
    prec_.validate();
    const double eta = p_.eta, mu = p_.mu, omega = p_.omega;
    at_ = 0.5 * p_.alpha;
    // eta <-> 1/eta symmetry makes |eta-1|, |P| the right general form.
    // The eta^{-1/2} follows from the two-gamma-sum derivation and is
    // what makes the density integrate to one.
    ln_s_ = 0.5 * std::log(kPi) + std::log(at_) + (mu + 0.5) * std::log(mu) +
            (0.5 - mu) * std::log(std::abs(eta - 1.0)) +
            (mu + 0.5) * std::log(eta + 1.0) - 0.5 * std::log(eta) -
            std::lgamma(mu);
    a_const_ = mu * (1.0 + eta) * (1.0 + eta) / (2.0 * eta);
    p_const_ = std::abs(mu * (eta * eta - 1.0) / (2.0 * eta));
    beta_exp_ = at_ * (mu + 0.5);
    u2_ = a_const_ / std::pow(omega, at_);
    // Gamma-sum sampler rates (A -/+ |P|); the sum of the two gamma
    // variates has exactly the Bessel-form density of the normalized
    // power (gamma/omega)^{alpha_tilde}.
    rate_lo_ = a_const_ - p_const_;  // = mu(1+eta)/eta or mu(1+eta)
    rate_hi_ = a_const_ + p_const_;

    // Series coefficients u1, u3 and the CDF coefficients.
    const double ln_half_p = std::log(p_const_ / 2.0) - at_ * std::log(omega);
    double csum = 0.0;
    for (int n = 0; n < prec_.max_series_terms; ++n) {
        double lu1 = ln_s_ + (mu - 0.5 + 2.0 * n) * ln_half_p -
                     std::lgamma(n + 1.0) - beta_exp_ * std::log(omega) -
                     std::lgamma(mu + 0.5 + n);
        double w1 = 2.0 * (mu + n);
        double lc1 = lu1 + std::lgamma(w1) - std::log(at_) - w1 * std::log(u2_);
        ln_u1_.push_back(lu1);
        u3_.push_back(at_ * (mu - 0.5 + 2.0 * n) + beta_exp_ - 1.0);
        ln_c1_.push_back(lc1);
        const double c1 = std::exp(lc1);
        csum += c1;
        tail_.push_back(std::max(0.0, 1.0 - csum));
        // 1 - csum stalls at lgamma roundoff (~1e-13), so truncate on the
        // term size instead; terms decay geometrically past the peak.
        if (n >= 2 && c1 < 1e-14 * csum && ln_c1_[n] < ln_c1_[n - 1]) break;
    }
}

double RfLink::ln_u4(int n, int t) const {
    double w1 = this->w1(n);
    return ln_u1_[n] + std::lgamma(w1) - std::log(at_) - w1 * std::log(u2_) +
           t * std::log(u2_) - std::lgamma(t + 1.0);
}

double RfLink::pdf(double gamma) const {
    if (!(gamma > 0.0)) throw DomainError("rf_pdf: gamma must be > 0");
    const double mu = p_.mu;
    const double x = std::pow(gamma / p_.omega, at_);
    // Log-space Bessel form (density of the two-gamma sum, transformed):
    // f(g) = at/g * sqrt(pi)/Gamma(mu) (ab)^mu |P|^{1/2-mu}
    //        X^{mu+1/2} e^{-A X} I_{mu-1/2}(|P| X),  X = (g/omega)^at.
    double lf = 0.5 * std::log(kPi) - std::lgamma(mu) +
                mu * std::log(rate_lo_ * rate_hi_) +
                (0.5 - mu) * std::log(2.0 * p_const_) + (mu + 0.5) * std::log(x) -
                a_const_ * x + log_bessel_i(mu - 0.5, p_const_ * x) +
                std::log(at_) - std::log(gamma);
    return lf < -745.0 ? 0.0 : std::exp(lf);
}

double RfLink::cdf(double gamma) const {
    if (gamma < 0.0) throw DomainError("rf_cdf: gamma must be >= 0");
    if (gamma == 0.0) return 0.0;
    const double z = u2_ * std::pow(gamma, at_);
    double sum = 0.0;
    for (std::size_t n = 0; n < ln_c1_.size(); ++n) {
        sum += std::exp(ln_c1_[n]) * lower_inc_gamma_reg(w1(static_cast<int>(n)), z);
        if (tail_[n] < 1e-13) break;  // remaining terms bounded by tail_
    }
    return sum > 1.0 ? 1.0 : sum;
}

double RfLink::cdf_finite_sum(double gamma) const {
    double two_mu = 2.0 * p_.mu;
    if (std::abs(two_mu - std::round(two_mu)) > 1e-9)
        throw DomainError("rf_cdf_finite_sum: requires 2*mu integer");
    if (gamma < 0.0) throw DomainError("rf_cdf_finite_sum: gamma must be >= 0");
    if (gamma == 0.0) return 0.0;
    const double z = u2_ * std::pow(gamma, at_);
    const double lgam = std::log(gamma);
    double sub = 0.0;
    for (std::size_t n = 0; n < ln_c1_.size(); ++n) {
        int w1i = static_cast<int>(std::lround(w1(static_cast<int>(n))));
        for (int t = 0; t < w1i; ++t)
            sub += std::exp(ln_u4(static_cast<int>(n), t) - z +
                            at_ * t * lgam);
        if (tail_[n] < 1e-13) break;
    }
    double v = 1.0 - sub;
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

double RfLink::sample(SampleRng& rng) const {
    double u = rng.gamma(p_.mu) / rate_lo_ + rng.gamma(p_.mu) / rate_hi_;
    return p_.omega * std::pow(u, 1.0 / at_);
}

std::vector<double> RfLink::sample_n(std::uint64_t seed, std::uint32_t label,
                                     std::size_t n) const {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SampleRng rng(seed, label, i);
        out.push_back(sample(rng));
    }
    return out;
}

}  // namespace rfso
