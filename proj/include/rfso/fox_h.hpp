#pragma once

#include <complex>
#include <vector>

#include "rfso/precision.hpp"

namespace rfso {

// One gamma factor of a Fox H kernel: coefficient and positive scale.
struct GammaFactor {
    double coeff;
    double scale = 1.0;
};

// The four parameter groups of a Fox H kernel
//
//   H^{m,n}_{p,q}[x] = (2*pi*i)^{-1} Integral K(s) x^{-s} ds,
//
//   K(s) =  prod_ul Gamma(1 - a - A s) * prod_ll Gamma(b + B s)
//          ---------------------------------------------------------
//           prod_ur Gamma(a + A s)     * prod_lr Gamma(1 - b - B s)
//
// upper_left holds the first n upper parameters, lower_left the first m
// lower parameters. For a Meijer G all scales are 1.
struct GammaTriple {
    std::vector<GammaFactor> upper_left;
    std::vector<GammaFactor> upper_right;
    std::vector<GammaFactor> lower_left;
    std::vector<GammaFactor> lower_right;

    void validate() const;  // positive scales; throws DomainError
};

// Result of a contour evaluation: value plus a truncation/quadrature bound.
struct ContourEval {
    double value;
    double error;
    int evals = 0;
};

// Fox H function of positive real argument via vertical-line
// Mellin-Barnes quadrature. Throws ContourError when no vertical line
// separates the left and right pole families, ConvergenceError when the
// node budget runs out.
ContourEval fox_h(const GammaTriple& kernel, double x,
                  const Precision& prec = {});

// Meijer G built from plain parameter lists: a_top = a_1..a_n,
// a_rest = a_{n+1}..a_p, b_top = b_1..b_m, b_rest = b_{m+1}..b_q.
GammaTriple meijer_kernel(const std::vector<double>& a_top,
                          const std::vector<double>& a_rest,
                          const std::vector<double>& b_top,
                          const std::vector<double>& b_rest);

ContourEval meijer_g(const GammaTriple& kernel, double x,
                     const Precision& prec = {});

// Delta(k, b) = (b/k, (b+1)/k, ..., (b+k-1)/k).
std::vector<double> delta_list(int k, double b);

// Internals shared with the bivariate evaluator.
namespace contour {
std::complex<double> log_kernel(const GammaTriple& k, std::complex<double> s);
double left_pole_bound(const GammaTriple& k);   // sup of left-family poles
double right_pole_bound(const GammaTriple& k);  // inf of right-family poles
double decay_rate(const GammaTriple& k);        // exp decay per unit |Im s|
}  // namespace contour

}  // namespace rfso
