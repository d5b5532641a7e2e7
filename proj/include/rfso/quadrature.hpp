#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "rfso/errors.hpp"

namespace rfso {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evals = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 abscissae and weights on [-1, 1].
inline constexpr double kKronrodX[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kKronrodW[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kGaussW[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

template <class F>
void gk15(const F& f, double a, double b, double& val, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    fv[0] = f(mid);
    for (int i = 1; i < 8; ++i) {
        double dx = half * kKronrodX[i];
        fv[2 * i - 1] = f(mid + dx);
        fv[2 * i] = f(mid - dx);
    }
    double k15 = kKronrodW[0] * fv[0];
    double resabs = kKronrodW[0] * std::abs(fv[0]);
    for (int i = 1; i < 8; ++i) {
        k15 += kKronrodW[i] * (fv[2 * i - 1] + fv[2 * i]);
        resabs += kKronrodW[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    }
    double g7 = kGaussW[0] * fv[0];
    for (int i = 1; i < 4; ++i) g7 += kGaussW[i] * (fv[4 * i - 1] + fv[4 * i]);
    // Scale-aware error sharpening (the classic resasc formula).
    double mean = 0.5 * k15;
    double resasc = kKronrodW[0] * std::abs(fv[0] - mean);
    for (int i = 1; i < 8; ++i)
        resasc += kKronrodW[i] *
                  (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
    resasc *= half;
    val = k15 * half;
    err = std::abs((k15 - g7) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    double round_floor = 50.0 * 2.22e-16 * resabs * half;
    if (round_floor > 0.0) err = std::max(err, round_floor);
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration on a finite interval.
// Splits the worst segment until |error| <= max(abs_tol, rel_tol*|value|)
// or the evaluation budget is exhausted (then throws ConvergenceError
// unless best_effort is set).
template <class F>
QuadResult integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                     double abs_tol = 1e-14, int max_evals = 200000,
                     bool best_effort = false) {
    struct Seg {
        double a, b, val, err;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    std::priority_queue<Seg> heap;
    double val, err;
    detail::gk15(f, a, b, val, err);
    heap.push({a, b, val, err});
    int evals = 15;
    double total_val = val, total_err = err;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total_val)) &&
           evals + 30 <= max_evals) {
        Seg s = heap.top();
        heap.pop();
        double m = 0.5 * (s.a + s.b);
        Seg l{s.a, m, 0, 0}, r{m, s.b, 0, 0};
        detail::gk15(f, l.a, l.b, l.val, l.err);
        detail::gk15(f, r.a, r.b, r.val, r.err);
        evals += 30;
        total_val += l.val + r.val - s.val;
        total_err += l.err + r.err - s.err;
        heap.push(l);
        heap.push(r);
        if (heap.top().err <= 0.0) break;  // cannot refine further
    }
    // Recompute totals from the heap for a cleaner sum.
    total_val = 0.0;
    total_err = 0.0;
    std::vector<Seg> segs;
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(),
              [](const Seg& x, const Seg& y) { return x.a < y.a; });
    for (const Seg& s : segs) {
        total_val += s.val;
        total_err += s.err;
    }
    if (!best_effort &&
        total_err > std::max(abs_tol, rel_tol * std::abs(total_val)) * 10.0)
        throw ConvergenceError("integrate: tolerance not reached within budget");
    return {total_val, total_err, evals};
}

// Integral over (0, inf) via the substitution x = t/(1-t).
template <class F>
QuadResult integrate_zero_inf(const F& f, double rel_tol = 1e-10,
                              double abs_tol = 1e-14, int max_evals = 400000,
                              bool best_effort = false) {
    auto g = [&f](double t) {
        double om = 1.0 - t;
        double x = t / om;
        double v = f(x) / (om * om);
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate(g, 0.0, 1.0, rel_tol, abs_tol, max_evals, best_effort);
}

}  // namespace rfso
