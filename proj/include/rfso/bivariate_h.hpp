#pragma once

#include <vector>

#include "rfso/fox_h.hpp"
#include "rfso/precision.hpp"

namespace rfso {

// A gamma factor shared between both contour variables:
//   numerator:  Gamma(coeff + s_scale*s + t_scale*t)
//   otherwise:  1 / Gamma(coeff + s_scale*s + t_scale*t)
struct JointFactor {
    double coeff;
    double s_scale;
    double t_scale;
    bool numerator = true;
};

// Kernel of a bivariate Fox H-type function
//
//   H[x, y] = (2*pi*i)^{-2} IntInt J(s,t) Ks(s) Kt(t) x^{-s} y^{-t} ds dt
//
// where Ks, Kt are univariate Fox H kernels (see GammaTriple) and J is
// the product of the joint factors.
struct BivariateKernel {
    std::vector<JointFactor> joint;
    GammaTriple s_kernel;
    GammaTriple t_kernel;
};

// Nested vertical-contour evaluation. The abscissas are chosen inside
// the admissible rectangle (separating strips of both kernels,
// restricted so every numerator joint factor keeps a positive real
// argument on the contours). Throws ContourError when that rectangle is
// empty, ConvergenceError when the node budget runs out.
ContourEval bivariate_h(const BivariateKernel& kernel, double x, double y,
                        const Precision& prec = {});

}  // namespace rfso
