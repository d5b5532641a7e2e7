#pragma once

#include <complex>

namespace rfso {

using cplx = std::complex<double>;

// Principal-branch log-gamma for complex argument.
// Throws PoleError at non-positive integers.
cplx log_gamma(cplx z);

// Real log-gamma of a positive argument (thin wrapper, kept for symmetry).
double log_gamma(double x);

// Modified Bessel function of the first kind, real order nu >= 0, x >= 0.
// Throws OverflowError once the result would exceed double range.
double bessel_i(double nu, double x);

// log I_nu(x); valid for all x >= 0, never overflows.
double log_bessel_i(double nu, double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double lower_inc_gamma_reg(double a, double x);

}  // namespace rfso
