#pragma once

#include <cstdint>
#include <vector>

#include "rfso/precision.hpp"
#include "rfso/rng.hpp"

namespace rfso {

// alpha-eta-mu fading link parameters. omega is the average SNR in
// linear units; use from_db for figure-caption style inputs.
struct RfFadingParams {
    double alpha;  // non-linearity, > 0
    double eta;    // in-phase/quadrature power ratio, > 0, != 1
    double mu;     // multipath clusters, >= 0.5
    double omega;  // average SNR, linear

    static RfFadingParams from_db(double alpha, double eta, double mu,
                                  double omega_db);
    void validate() const;
};

// Precomputed series representation of one alpha-eta-mu link: PDF, CDF
// and exact sampling. Immutable after construction, safe to share
// across threads.
class RfLink {
  public:
    explicit RfLink(const RfFadingParams& p, const Precision& prec = {});

    const RfFadingParams& params() const { return p_; }

    double pdf(double gamma) const;
    double cdf(double gamma) const;

    // Finite-sum CDF form; requires 2*mu to be a positive integer.
    double cdf_finite_sum(double gamma) const;

    // One exact draw of the instantaneous SNR (two gamma variates).
    double sample(SampleRng& rng) const;

    // Sampling shortcut used by tests: n i.i.d. draws from stream
    // (seed, label), deterministic in the sample index.
    std::vector<double> sample_n(std::uint64_t seed, std::uint32_t label,
                                 std::size_t n) const;

    // Derived constants (exposed for the secrecy closed forms).
    double alpha_tilde() const { return at_; }
    double u2() const { return u2_; }
    int n_terms() const { return static_cast<int>(ln_u1_.size()); }
    double ln_u1(int n) const { return ln_u1_[n]; }
    double u3(int n) const { return u3_[n]; }
    // W1 = (u3+1)/alpha_tilde = 2(mu + n); exact only when 2mu integer.
    double w1(int n) const { return 2.0 * (p_.mu + n); }
    // ln u4 for term (n, t): u4 = Gamma(W1) u1 / (at u2^{W1}) u2^t / t!.
    double ln_u4(int n, int t) const;

  private:
    RfFadingParams p_;
    Precision prec_;
    double at_;           // alpha/2
    double ln_s_;         // ln |S|
    double a_const_;      // A
    double p_const_;      // |P|
    double beta_exp_;     // at*(mu + 1/2)
    double u2_;
    double rate_lo_, rate_hi_;  // gamma-sum sampler rates
    std::vector<double> ln_u1_;  // per-N1 log coefficients
    std::vector<double> u3_;
    std::vector<double> ln_c1_;  // CDF coefficients: u1 Gamma(W1)/(at u2^W1)
    std::vector<double> tail_;   // 1 - cumulative sum of exp(ln_c1)
};

double db_to_linear(double db);
double linear_to_db(double lin);

}  // namespace rfso
