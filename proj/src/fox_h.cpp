#include "rfso/fox_h.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rfso/errors.hpp"
#include "rfso/gamma.hpp"
#include "rfso/quadrature.hpp"

namespace rfso {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

namespace contour {

// Log of the kernel at s; -inf real part when a denominator factor sits
// on a pole (the kernel vanishes there).
cplx log_kernel(const GammaTriple& k, cplx s) {
    cplx lk(0.0, 0.0);
    for (const auto& f : k.upper_left) lk += log_gamma(1.0 - f.coeff - f.scale * s);
    for (const auto& f : k.lower_left) lk += log_gamma(f.coeff + f.scale * s);
    for (const auto& f : k.upper_right) lk -= log_gamma(f.coeff + f.scale * s);
    for (const auto& f : k.lower_right) lk -= log_gamma(1.0 - f.coeff - f.scale * s);
    return lk;
}

}  // namespace contour

void GammaTriple::validate() const {
    auto chk = [](const std::vector<GammaFactor>& g) {
        for (const auto& f : g)
            if (!(f.scale > 0.0))
                throw DomainError("GammaTriple: scales must be strictly positive");
    };
    chk(upper_left);
    chk(upper_right);
    chk(lower_left);
    chk(lower_right);
}

std::vector<double> delta_list(int k, double b) {
    std::vector<double> out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) out.push_back((b + j) / k);
    return out;
}

GammaTriple meijer_kernel(const std::vector<double>& a_top,
                          const std::vector<double>& a_rest,
                          const std::vector<double>& b_top,
                          const std::vector<double>& b_rest) {
    GammaTriple k;
    for (double a : a_top) k.upper_left.push_back({a, 1.0});
    for (double a : a_rest) k.upper_right.push_back({a, 1.0});
    for (double b : b_top) k.lower_left.push_back({b, 1.0});
    for (double b : b_rest) k.lower_right.push_back({b, 1.0});
    return k;
}

namespace contour {

// Rightmost pole of the numerator "left" family (poles of Gamma(b + B s)).
double left_pole_bound(const GammaTriple& k) {
    double L = -kInf;
    for (const auto& f : k.lower_left) L = std::max(L, -f.coeff / f.scale);
    return L;
}

// Leftmost pole of the numerator "right" family (poles of Gamma(1-a-A s)).
double right_pole_bound(const GammaTriple& k) {
    double R = kInf;
    for (const auto& f : k.upper_left) R = std::min(R, (1.0 - f.coeff) / f.scale);
    return R;
}

// Exponential decay rate of |K(c+it)| as t -> inf (per |t|).
double decay_rate(const GammaTriple& k) {
    double d = 0.0;
    for (const auto& f : k.upper_left) d += f.scale;
    for (const auto& f : k.lower_left) d += f.scale;
    for (const auto& f : k.upper_right) d -= f.scale;
    for (const auto& f : k.lower_right) d -= f.scale;
    return 0.5 * kPi * d;
}

bool on_denominator_pole(const GammaTriple& k, double cc, double margin) {
    auto near_np_int = [margin](double v) {
        double r = std::round(v);
        return r <= 0.0 && std::abs(v - r) < margin;
    };
    for (const auto& f : k.upper_right)
        if (near_np_int(f.coeff + f.scale * cc)) return true;
    for (const auto& f : k.lower_right)
        if (near_np_int(1.0 - f.coeff - f.scale * cc)) return true;
    return false;
}

// Pick the vertical line Re(s) = c inside the separating strip so that
// the integrand magnitude at t = 0 is minimal (steepest-descent style);
// this keeps cancellation small when the function value is tiny
// compared to the gamma factors. Nudged off any denominator pole.
double choose_abscissa(const GammaTriple& k, double lnx) {
    double L = left_pole_bound(k);
    double R = right_pole_bound(k);
    if (L >= R - 1e-12)
        throw ContourError("fox_h: pole families interlace, no vertical separator");

    auto logmag = [&](double c) {
        if (on_denominator_pole(k, c, 0.02)) return kInf;  // kernel dips to zero
        return log_kernel(k, cplx(c, 0.0)).real() - c * lnx;
    };
    // Map a bounded parameter w in (0, 1) onto the strip, keeping a
    // margin from the edge poles so the contour peak stays resolvable.
    auto to_c = [&](double w) {
        if (std::isfinite(L) && std::isfinite(R)) {
            double d = std::min(0.35 * (R - L), 0.05);
            return L + d + (R - L - 2 * d) * w;
        }
        // exp-spaced reach into the unbounded side(s)
        if (std::isfinite(L)) return L + std::exp(-3.0 + 25.0 * w);
        if (std::isfinite(R)) return R - std::exp(-3.0 + 25.0 * w);
        return std::tan(kPi * (w - 0.5)) * 50.0;
    };
    const int kScan = 96;
    double best_w = 0.5, best = kInf;
    for (int i = 1; i < kScan; ++i) {
        double w = static_cast<double>(i) / kScan;
        double v = logmag(to_c(w));
        if (v < best) {
            best = v;
            best_w = w;
        }
    }
    // Local refinement by ternary search around the best scan point.
    double wl = std::max(best_w - 1.5 / kScan, 1e-6);
    double wr = std::min(best_w + 1.5 / kScan, 1.0 - 1e-6);
    for (int i = 0; i < 40; ++i) {
        double w1 = wl + (wr - wl) / 3.0, w2 = wr - (wr - wl) / 3.0;
        if (logmag(to_c(w1)) < logmag(to_c(w2)))
            wr = w2;
        else
            wl = w1;
    }
    double c = to_c(0.5 * (wl + wr));
    double width = (std::isfinite(L) && std::isfinite(R)) ? (R - L) : 2.0;
    for (int i = 0; i < 50 && on_denominator_pole(k, c, 1e-9); ++i)
        c += 0.013 * std::min(width, 1.0);
    return c;
}

// Truncation height T such that the tail contribution drops below target.
double choose_truncation(const GammaTriple& k, double lnx, double c, double rate,
                         double log_target) {
    double lk0 = log_kernel(k, cplx(c, 0.0)).real() - c * lnx;
    double T = std::max(5.0, (lk0 - log_target) / rate + 5.0);
    auto logmag = [&](double t) {
        return log_kernel(k, cplx(c, t)).real() - c * lnx;
    };
    for (int i = 0; i < 60 && logmag(T) > log_target; ++i) T *= 1.3;
    return T;
}

}  // namespace contour

ContourEval fox_h(const GammaTriple& k, double x, const Precision& prec) {
    prec.validate();
    k.validate();
    if (!(x > 0.0)) throw DomainError("fox_h: argument must be positive");

    const double rate = contour::decay_rate(k);
    if (rate <= 1e-12)
        throw ContourError("fox_h: contour kernel does not decay");
    const double lnx = std::log(x);
    const double c = contour::choose_abscissa(k, lnx);

    const double lk0 = contour::log_kernel(k, cplx(c, 0.0)).real() - c * lnx;
    if (lk0 > 690.0) throw OverflowError("fox_h: kernel magnitude overflows");
    const double scale = std::exp(std::min(690.0, lk0));
    const double target =
        std::max(prec.abs_tol, prec.rel_tol * std::max(scale, 1e-300)) * 1e-3;
    const double T =
        contour::choose_truncation(k, lnx, c, rate, std::log(target));

    auto integrand = [&](double t) {
        cplx s(c, t);
        cplx lk = contour::log_kernel(k, s) - s * lnx;
        double re = lk.real();
        if (re < -745.0) return 0.0;
        return std::exp(re) * std::cos(lk.imag());
    };

    // Trapezoid with interval doubling: geometrically convergent for
    // contour integrands that are analytic in a strip and decay
    // exponentially, and |I_{2n} - I_n| is a faithful error estimate.
    int n = 64;
    double h = T / n;
    double acc = 0.5 * (integrand(0.0) + integrand(T));
    for (int j = 1; j < n; ++j) acc += integrand(j * h);
    int evals = n + 1;
    double prev_val = acc * h;
    double diff = kInf, prev_diff = kInf;
    double value = prev_val;
    while (n < 2 * prec.max_contour_nodes) {
        for (int j = 0; j < n; ++j) acc += integrand((j + 0.5) * h);
        evals += n;
        n *= 2;
        h *= 0.5;
        value = acc * h;
        prev_diff = diff;
        diff = std::abs(value - prev_val);
        prev_val = value;
        double tol = std::max(prec.abs_tol, prec.rel_tol * std::abs(value));
        if (diff < tol && prev_diff < 100.0 * tol && n >= 256) break;
    }
    value /= kPi;
    double tail = target / (rate * kPi);
    double error = diff / kPi + tail + 2e-14 * std::abs(value);
    if (diff / kPi >
        10.0 * std::max(prec.abs_tol, prec.rel_tol * std::abs(value)))
        throw ConvergenceError("fox_h: contour quadrature budget exhausted");
    return {value, error, evals};
}

ContourEval meijer_g(const GammaTriple& kernel, double x, const Precision& prec) {
    for (const auto* grp : {&kernel.upper_left, &kernel.upper_right,
                            &kernel.lower_left, &kernel.lower_right})
        for (const auto& f : *grp)
            if (f.scale != 1.0)
                throw DomainError("meijer_g: all scales must be 1");
    return fox_h(kernel, x, prec);
}

}  // namespace rfso
