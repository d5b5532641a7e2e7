#pragma once

#include <cstdint>
#include <vector>

#include "rfso/fox_h.hpp"
#include "rfso/precision.hpp"
#include "rfso/rng.hpp"

namespace rfso {

// Photodetection mode; the numeric value is the SNR exponent r.
enum class Detection : int { HD = 1, IMDD = 2 };

// Optical hop parameters: Malaga turbulence with pointing error.
//   alpha_d     large-scale scattering shape, > 0
//   beta_d      coherent-power fading shape, positive integer
//   g           average power of the independent scatter term, > 0
//   omega_cap   average power of the coherent contribution, >= 0
//   eps         pointing-error severity (beamwidth/jitter ratio), > 0
//   det         HD (r=1) or IMDD (r=2)
//   u           average electrical SNR, linear
struct FsoChannelParams {
    double alpha_d;
    int beta_d;
    double g;
    double omega_cap;
    double eps;
    Detection det = Detection::HD;
    double u = 1.0;

    // Constituent form: total coherent power from line-of-sight power
    // omega, scatter power 2*b0, coupling rho and the phase offset
    // between the two coherent terms.
    static FsoChannelParams from_constituents(double alpha_d, int beta_d,
                                              double omega, double b0,
                                              double rho, double phase_diff,
                                              double eps, Detection det,
                                              double u);
    void validate() const;
    int r() const { return static_cast<int>(det); }
};

// One Malaga-with-pointing FSO link: PDF, CDF (Meijer G mixtures over
// the beta_d finite sum) and the derived constants used by the secrecy
// closed forms. Immutable after construction.
class FsoLink {
  public:
    explicit FsoLink(const FsoChannelParams& p, const Precision& prec = {});

    const FsoChannelParams& params() const { return p_; }

    double pdf(double gamma) const;
    double cdf(double gamma) const;

    // One draw from the generative chain (gamma-gamma-Rician-pointing).
    double sample_generative(SampleRng& rng) const;

    // Derived constants for the closed forms.
    int r() const { return p_.r(); }
    double u() const { return p_.u; }
    double a_d() const { return a_d_; }
    double b_d() const { return b_d_; }
    double sigma() const { return sigma_; }
    double big_f() const { return big_f_; }
    int n_terms() const { return p_.beta_d; }          // m = 1..beta_d
    double b_m(int m) const { return b_m_[m - 1]; }
    double c_m(int m) const { return c_m_[m - 1]; }
    const std::vector<double>& l1() const { return l1_; }
    const std::vector<double>& l2(int m) const { return l2_[m - 1]; }
    double min_l2(int m) const { return min_l2_[m - 1]; }

  private:
    FsoChannelParams p_;
    Precision prec_;
    double a_d_, b_d_, sigma_, big_f_;
    double mean_il_;                      // E[I * l]
    std::vector<double> b_m_, c_m_;
    std::vector<double> l1_;
    std::vector<std::vector<double>> l2_;
    std::vector<double> min_l2_;
    std::vector<GammaTriple> pdf_kernel_;  // per m
    std::vector<GammaTriple> cdf_kernel_;  // per m
};

// Table-accelerated inverse-transform sampler for the FSO SNR. Builds a
// monotone quantile interpolant of the link CDF once; draws are then
// O(log n). Below the table the power-law left tail of the CDF is used.
class FsoSampler {
  public:
    explicit FsoSampler(const FsoLink& link, int n_nodes = 2048);

    double sample(SampleRng& rng) const;
    double quantile(double p) const;

  private:
    std::vector<double> lg_;   // log-gamma grid
    std::vector<double> lp_;   // log of CDF at grid, strictly increasing
    std::vector<double> slope_;  // monotone pchip-style slopes
    double tail_exp_;          // d log F / d log gamma as gamma -> 0
};

}  // namespace rfso
