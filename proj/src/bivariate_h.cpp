#include "rfso/bivariate_h.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rfso/errors.hpp"
#include "rfso/gamma.hpp"

namespace rfso {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

cplx log_joint(const BivariateKernel& k, cplx s, cplx t) {
    cplx lj(0.0, 0.0);
    for (const auto& f : k.joint) {
        cplx g = log_gamma(f.coeff + f.s_scale * s + f.t_scale * t);
        lj += f.numerator ? g : -g;
    }
    return lj;
}

// Directional decay rates: the joint factors contribute to both axes.
double joint_scale_sum(const BivariateKernel& k, bool s_axis) {
    double d = 0.0;
    for (const auto& f : k.joint) {
        double sc = std::abs(s_axis ? f.s_scale : f.t_scale);
        d += f.numerator ? sc : -sc;
    }
    return d;
}

}  // namespace

ContourEval bivariate_h(const BivariateKernel& k, double x, double y,
                        const Precision& prec) {
    prec.validate();
    k.s_kernel.validate();
    k.t_kernel.validate();
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("bivariate_h: arguments must be positive");

    const double lnx = std::log(x), lny = std::log(y);
    double ls = contour::left_pole_bound(k.s_kernel);
    double rs = contour::right_pole_bound(k.s_kernel);
    double lt = contour::left_pole_bound(k.t_kernel);
    double rt = contour::right_pole_bound(k.t_kernel);
    if (ls >= rs - 1e-12 || lt >= rt - 1e-12)
        throw ContourError("bivariate_h: no separating strip for a kernel");

    // The contour must keep a finite distance from every pole: the
    // integrand develops a peak of width equal to that distance, and the
    // trapezoid grids have to resolve it.
    const double kMargin = 0.1;
    auto axis_margin = [kMargin](double lo, double hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi)) return kMargin;
        return std::min(0.35 * (hi - lo), kMargin);
    };
    const double ms = axis_margin(ls, rs), mt = axis_margin(lt, rt);
    auto joint_ok = [&](double cs, double ct) {
        for (const auto& f : k.joint)
            if (f.numerator &&
                f.coeff + f.s_scale * cs + f.t_scale * ct < kMargin)
                return false;
        return true;
    };
    auto logmag = [&](double cs, double ct) {
        // Stay strictly inside both separating strips: crossing an axis
        // pole would change the contour class, not just the accuracy.
        if (cs < ls + ms || cs > rs - ms) return kInf;
        if (ct < lt + mt || ct > rt - mt) return kInf;
        if (!joint_ok(cs, ct)) return kInf;
        return log_joint(k, cs, ct).real() +
               contour::log_kernel(k.s_kernel, cplx(cs, 0.0)).real() +
               contour::log_kernel(k.t_kernel, cplx(ct, 0.0)).real() -
               cs * lnx - ct * lny;
    };
    auto clampw = [&](double lo, double hi, double w) {
        double d = axis_margin(lo, hi);
        if (!std::isfinite(lo)) lo = hi - 40.0;
        if (!std::isfinite(hi)) hi = lo + 40.0;
        return lo + d + (hi - lo - 2 * d) * w;
    };
    // Coarse grid search for the joint minimum of the integrand magnitude.
    const int kGrid = 24;
    double cs = clampw(ls, rs, 0.5), ct = clampw(lt, rt, 0.5), best = kInf;
    bool found = false;
    for (int i = 0; i <= kGrid; ++i)
        for (int j = 0; j <= kGrid; ++j) {
            double a = clampw(ls, rs, static_cast<double>(i) / kGrid);
            double b = clampw(lt, rt, static_cast<double>(j) / kGrid);
            double v = logmag(a, b);
            if (v < best) {
                best = v;
                cs = a;
                ct = b;
                found = true;
            }
        }
    if (!found)
        throw ContourError(
            "bivariate_h: joint factors exclude the whole abscissa rectangle");
    // Coordinate-descent refinement.
    double step_s = (std::isfinite(rs - ls) ? rs - ls : 40.0) / kGrid;
    double step_t = (std::isfinite(rt - lt) ? rt - lt : 40.0) / kGrid;
    for (int it = 0; it < 24; ++it) {
        for (double* c : {&cs, &ct}) {
            double step = (c == &cs) ? step_s : step_t;
            double lo = *c - step, hi = *c + step;
            for (int b = 0; b < 18; ++b) {
                double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                double v1 = (c == &cs) ? logmag(m1, ct) : logmag(cs, m1);
                double v2 = (c == &cs) ? logmag(m2, ct) : logmag(cs, m2);
                if (v1 < v2)
                    hi = m2;
                else
                    lo = m1;
            }
            double cand = 0.5 * (lo + hi);
            double vc = (c == &cs) ? logmag(cand, ct) : logmag(cs, cand);
            if (vc < logmag(cs, ct)) *c = cand;
        }
        step_s *= 0.5;
        step_t *= 0.5;
    }
    best = logmag(cs, ct);
    if (best > 690.0)
        throw OverflowError("bivariate_h: integrand magnitude overflows");

    const double rate_s =
        contour::decay_rate(k.s_kernel) + 0.5 * kPi * joint_scale_sum(k, true);
    const double rate_t =
        contour::decay_rate(k.t_kernel) + 0.5 * kPi * joint_scale_sum(k, false);
    if (rate_s <= 1e-12 || rate_t <= 1e-12)
        throw ContourError("bivariate_h: contour kernel does not decay");

    const double scale = std::exp(std::min(690.0, best));
    const double target =
        std::max(prec.abs_tol, prec.rel_tol * std::max(scale, 1e-300)) * 1e-3;
    const double log_target = std::log(target);

    auto axis_logmag_s = [&](double sig) {
        return (log_joint(k, cplx(cs, sig), cplx(ct, 0.0)) +
                contour::log_kernel(k.s_kernel, cplx(cs, sig)))
                   .real() +
               contour::log_kernel(k.t_kernel, cplx(ct, 0.0)).real() -
               cs * lnx - ct * lny;
    };
    auto axis_logmag_t = [&](double tau) {
        return (log_joint(k, cplx(cs, 0.0), cplx(ct, tau)) +
                contour::log_kernel(k.t_kernel, cplx(ct, tau)))
                   .real() +
               contour::log_kernel(k.s_kernel, cplx(cs, 0.0)).real() -
               cs * lnx - ct * lny;
    };
    double ts = std::max(5.0, (best - log_target) / rate_s + 5.0);
    for (int i = 0; i < 60 && axis_logmag_s(ts) > log_target; ++i) ts *= 1.3;
    double tt = std::max(5.0, (best - log_target) / rate_t + 5.0);
    for (int i = 0; i < 60 && axis_logmag_t(tt) > log_target; ++i) tt *= 1.3;

    auto f = [&](double sig, double tau) {
        cplx s(cs, sig), t(ct, tau);
        cplx lk = log_joint(k, s, t) + contour::log_kernel(k.s_kernel, s) +
                  contour::log_kernel(k.t_kernel, t) - s * lnx - t * lny;
        if (lk.real() < -745.0) return cplx(0.0, 0.0);
        return std::exp(lk);
    };

    // Inner trapezoid over the full s-line. The node count is calibrated
    // once at tau = 0 (the magnitude peak) and then reused: refining per
    // outer node would redo identical work for every tau.
    long evals = 0;
    const double inner_tol =
        0.01 * std::max(prec.abs_tol, prec.rel_tol * std::max(scale, 1e-300)) /
        std::max(1.0, tt);
    // Joint factors couple the axes: |Gamma(c + a s + b t)| has a ridge
    // along a*sigma + b*tau = 0, so the inner range must widen with tau.
    double ridge = 0.0;
    for (const auto& f : k.joint)
        if (f.numerator && f.s_scale != 0.0 && f.t_scale != 0.0)
            ridge = std::max(ridge, std::abs(f.t_scale / f.s_scale));
    auto inner_fixed = [&](double tau, int n) {
        double lim = ts + ridge * std::abs(tau);
        n = static_cast<int>(n * lim / ts + 1.0);
        double h = 2.0 * lim / n;
        cplx acc = 0.5 * (f(-lim, tau) + f(lim, tau));
        for (int j = 1; j < n; ++j) acc += f(-lim + j * h, tau);
        evals += n + 1;
        return acc * h;
    };
    int ns = 64;
    {
        cplx prev = inner_fixed(0.0, ns);
        double d = kInf;
        while (ns < prec.max_contour_nodes) {
            cplx cur = inner_fixed(0.0, 2 * ns);
            d = std::abs(cur - prev);
            prev = cur;
            ns *= 2;
            if (d < inner_tol && ns >= 256) break;
        }
        if (d > 100.0 * inner_tol)
            throw ConvergenceError(
                "bivariate_h: inner contour did not converge within budget");
    }
    auto inner = [&](double tau) { return inner_fixed(tau, ns); };

    // Outer integral over tau in [0, tt], folded by conjugate symmetry.
    int n = 64;
    double h = tt / n;
    cplx acc = 0.5 * (inner(0.0) + inner(tt));
    for (int j = 1; j < n; ++j) acc += inner(j * h);
    double prev_val = (acc * h).real();
    double value = prev_val, diff = kInf;
    while (n < prec.max_contour_nodes) {
        for (int j = 0; j < n; ++j) acc += inner((j + 0.5) * h);
        n *= 2;
        h *= 0.5;
        value = (acc * h).real();
        diff = std::abs(value - prev_val);
        prev_val = value;
        if (diff < std::max(prec.abs_tol, prec.rel_tol * std::abs(value)) &&
            n >= 256)
            break;
    }
    value /= 2.0 * kPi * kPi;
    diff /= 2.0 * kPi * kPi;
    double tail = target * (1.0 / rate_s + 1.0 / rate_t) / (2.0 * kPi * kPi);
    double error = diff + tail + 2e-14 * std::abs(value);
    if (diff > 10.0 * std::max(prec.abs_tol, prec.rel_tol * std::abs(value)))
        throw ConvergenceError("bivariate_h: contour budget exhausted");
    return {value, error, static_cast<int>(std::min<long>(evals, 1 << 30))};
}

}  // namespace rfso
