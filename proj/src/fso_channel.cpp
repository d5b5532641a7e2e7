#include "rfso/fso_channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rfso/errors.hpp"
#include "rfso/gamma.hpp"

namespace rfso {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FsoChannelParams FsoChannelParams::from_constituents(double alpha_d, int beta_d,
                                                     double omega, double b0,
                                                     double rho,
                                                     double phase_diff,
                                                     double eps, Detection det,
                                                     double u) {
    if (rho < 0.0 || rho > 1.0)
        throw DomainError("FsoChannelParams: rho must be in [0, 1]");
    if (b0 < 0.0 || omega < 0.0)
        throw DomainError("FsoChannelParams: omega and b0 must be >= 0");
    FsoChannelParams p;
    p.alpha_d = alpha_d;
    p.beta_d = beta_d;
    p.omega_cap = omega + 2.0 * b0 * rho +
                  2.0 * std::sqrt(2.0 * b0 * rho * omega) * std::cos(phase_diff);
    p.g = 2.0 * b0 * (1.0 - rho);
    p.eps = eps;
    p.det = det;
    p.u = u;
    p.validate();
    return p;
}

void FsoChannelParams::validate() const {
    if (!(alpha_d > 0.0))
        throw DomainError("FsoChannelParams: alpha_d must be > 0");
    if (beta_d < 1)
        throw DomainError("FsoChannelParams: beta_d must be a positive integer");
    if (!(g > 0.0))
        throw DomainError(
            "FsoChannelParams: g must be > 0 (use a small value such as 1e-4 "
            "for the fully coherent limit)");
    if (omega_cap < 0.0)
        throw DomainError("FsoChannelParams: omega_cap must be >= 0");
    if (!(eps > 0.0)) throw DomainError("FsoChannelParams: eps must be > 0");
    if (!(u > 0.0)) throw DomainError("FsoChannelParams: u must be > 0");
}

FsoLink::FsoLink(const FsoChannelParams& p, const Precision& prec)
    : p_(p), prec_(prec) {
    p_.validate();
    prec_.validate();
    const double al = p_.alpha_d, g = p_.g, om = p_.omega_cap, e2 = p_.eps * p_.eps;
    const int beta = p_.beta_d;
    const int r = p_.r();
    const double gbo = g * beta + om;

    a_d_ = 2.0 * std::pow(al, 0.5 * al) /
           (std::pow(g, 1.0 + 0.5 * al) * std::tgamma(al)) *
           std::pow(g * beta / gbo, beta + 0.5 * al);
    b_d_ = e2 * al * beta * (g + om) / ((e2 + 1.0) * gbo);
    sigma_ = e2 * a_d_ / (std::pow(2.0, r) * std::pow(2.0 * kPi, r - 1));
    big_f_ = std::pow(b_d_, r) / std::pow(static_cast<double>(r), 2.0 * r);
    mean_il_ = (g + om) * e2 / (e2 + 1.0);

    l1_ = delta_list(r, e2 + 1.0);
    for (int m = 1; m <= beta; ++m) {
        // binom(beta-1, m-1) / (m-1)!
        double comb = 1.0;
        for (int j = 1; j < m; ++j) comb *= static_cast<double>(beta - j) / j;
        comb /= std::tgamma(static_cast<double>(m));
        double a_m = comb * std::pow(gbo, 1.0 - 0.5 * m) *
                     std::pow(om / g, m - 1.0) * std::pow(al / beta, 0.5 * m);
        double bm = a_m * std::pow(al * beta / gbo, -0.5 * (al + m));
        b_m_.push_back(bm);
        c_m_.push_back(bm * std::pow(static_cast<double>(r), al + m - 1.0));

        std::vector<double> l2 = delta_list(r, e2);
        for (double v : delta_list(r, al)) l2.push_back(v);
        for (double v : delta_list(r, static_cast<double>(m))) l2.push_back(v);
        min_l2_.push_back(*std::min_element(l2.begin(), l2.end()));

        pdf_kernel_.push_back(meijer_kernel(
            {}, {e2 + 1.0}, {e2, al, static_cast<double>(m)}, {}));
        cdf_kernel_.push_back(meijer_kernel({1.0}, l1_, l2, {0.0}));
        l2_.push_back(std::move(l2));
    }
}

double FsoLink::pdf(double gamma) const {
    if (!(gamma > 0.0)) throw DomainError("fso_pdf: gamma must be > 0");
    const int r = p_.r();
    const double z = b_d_ * std::pow(gamma / p_.u, 1.0 / r);
    double sum = 0.0;
    for (int m = 1; m <= p_.beta_d; ++m)
        sum += b_m_[m - 1] * meijer_g(pdf_kernel_[m - 1], z, prec_).value;
    double e2 = p_.eps * p_.eps;
    double v = e2 * a_d_ / (std::pow(2.0, r) * gamma) * sum;
    return v < 0.0 ? 0.0 : v;  // contour noise can undershoot zero in tails
}

double FsoLink::cdf(double gamma) const {
    if (gamma < 0.0) throw DomainError("fso_cdf: gamma must be >= 0");
    if (gamma == 0.0) return 0.0;
    const double z = big_f_ / p_.u * gamma;
    double sum = 0.0;
    for (int m = 1; m <= p_.beta_d; ++m)
        sum += c_m_[m - 1] * meijer_g(cdf_kernel_[m - 1], z, prec_).value;
    double v = sigma_ * sum;
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

double FsoLink::sample_generative(SampleRng& rng) const {
    const double al = p_.alpha_d;
    const int beta = p_.beta_d;
    double x = rng.gamma(al) / al;
    double coher = p_.omega_cap * rng.gamma(static_cast<double>(beta)) / beta;
    double s = std::sqrt(0.5 * p_.g);
    double re = std::sqrt(coher) + s * rng.normal();
    double im = s * rng.normal();
    double y = re * re + im * im;
    double l = std::pow(rng.uniform(), 1.0 / (p_.eps * p_.eps));
    double norm = x * y * l / mean_il_;
    return p_.u * std::pow(norm, static_cast<double>(p_.r()));
}

FsoSampler::FsoSampler(const FsoLink& link, int n_nodes) {
    const double e2 = link.params().eps * link.params().eps;
    tail_exp_ =
        std::min({e2, link.params().alpha_d, 1.0}) / link.r();

    // Bracket the support so the table spans CDF ~ [1e-10, 1 - 1e-10].
    double lo = link.u(), hi = link.u();
    while (link.cdf(lo) > 1e-10 && lo > 1e-280 * link.u()) lo *= 0.1;
    while (link.cdf(hi) < 1.0 - 1e-10 && hi < 1e280 * link.u()) hi *= 10.0;

    lg_.reserve(n_nodes);
    lp_.reserve(n_nodes);
    const double llo = std::log(lo), lhi = std::log(hi);
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_nodes; ++i) {
        double lg = llo + (lhi - llo) * i / (n_nodes - 1.0);
        double p = link.cdf(std::exp(lg));
        if (p <= 0.0 || p >= 1.0) continue;
        double lp = std::log(p);
        if (lp <= prev + 1e-14) continue;  // keep strictly increasing
        lg_.push_back(lg);
        lp_.push_back(lp);
        prev = lp;
    }
    if (lg_.size() < 8)
        throw ConvergenceError("FsoSampler: could not tabulate the CDF");

    // Fritsch-Carlson monotone slopes for log-gamma as a function of log-CDF.
    const std::size_t n = lg_.size();
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        d[i] = (lg_[i + 1] - lg_[i]) / (lp_[i + 1] - lp_[i]);
    slope_.assign(n, 0.0);
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) continue;
        double h0 = lp_[i] - lp_[i - 1], h1 = lp_[i + 1] - lp_[i];
        slope_[i] = 3.0 * (h0 + h1) /
                    ((2.0 * h1 + h0) / d[i - 1] + (h1 + 2.0 * h0) / d[i]);
    }
}

double FsoSampler::quantile(double p) const {
    double lp = std::log(p);
    if (lp <= lp_.front())
        return std::exp(lg_.front() + (lp - lp_.front()) / tail_exp_);
    if (lp >= lp_.back()) return std::exp(lg_.back());
    auto it = std::upper_bound(lp_.begin(), lp_.end(), lp);
    std::size_t i = static_cast<std::size_t>(it - lp_.begin()) - 1;
    double h = lp_[i + 1] - lp_[i];
    double t = (lp - lp_[i]) / h;
    double t2 = t * t, t3 = t2 * t;
    double y = (2 * t3 - 3 * t2 + 1) * lg_[i] + (t3 - 2 * t2 + t) * h * slope_[i] +
               (-2 * t3 + 3 * t2) * lg_[i + 1] + (t3 - t2) * h * slope_[i + 1];
    return std::exp(y);
}

double FsoSampler::sample(SampleRng& rng) const { return quantile(rng.uniform()); }

}  // namespace rfso
