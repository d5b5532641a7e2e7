#include "rfso/secrecy.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "rfso/bivariate_h.hpp"
#include "rfso/errors.hpp"
#include "rfso/fox_h.hpp"
#include "rfso/quadrature.hpp"

namespace rfso {

namespace {

// The closed forms merge the two RF exponentials into one, which needs
// a common power alpha/2 on both RF links, and the finite inner sums
// need 2*mu to be integral.
void require_closed_form_shape(const SecrecyLinks& links) {
    if (std::abs(links.main.alpha_tilde() - links.eve.alpha_tilde()) > 1e-9)
        throw DomainError(
            "closed forms need equal RF alpha on main and eavesdropper links");
    double at = links.main.alpha_tilde();
    if (std::abs(at - std::round(at)) > 1e-9)
        throw DomainError("closed forms need alpha/2 to be a positive integer");
    for (const RfLink* l : {&links.main, &links.eve}) {
        double w = 2.0 * l->params().mu;
        if (std::abs(w - std::round(w)) > 1e-9)
            throw DomainError("closed forms need 2*mu integral on RF links");
    }
}

// int_0^inf e^{-w g^at} g^{at*t} / (1+g) dg as a prefactor exp(lpref)
// times a contour value; M = t + 1/at.
MetricEval power_exp_cauchy(double w, double at, int t, const Precision& sub) {
    double m1 = t + 1.0 / at;
    GammaTriple k;
    k.lower_left.push_back({0.0, 1.0});
    k.upper_left.push_back({0.0, 1.0});
    k.upper_left.push_back({1.0 - m1, 1.0 / at});
    auto h = fox_h(k, std::pow(w, -1.0 / at), sub);
    double pref = std::exp(-m1 * std::log(w) - std::log(at));
    return {h.value * pref, h.error * pref};
}

// Same integrand additionally weighted by the optical CDF kernel for
// one finite-sum index m; evaluated as a double contour integral.
MetricEval power_exp_cauchy_optical(double w, double at, int t,
                                    const FsoLink& fso, int m,
                                    const Precision& sub) {
    double m1 = t + 1.0 / at;
    BivariateKernel k;
    k.joint.push_back({m1, -1.0 / at, -1.0 / at, true});
    k.s_kernel.upper_left.push_back({0.0, 1.0});
    k.s_kernel.lower_left.push_back({0.0, 1.0});
    k.t_kernel.upper_left.push_back({1.0, 1.0});
    for (double v : fso.l1()) k.t_kernel.upper_right.push_back({v, 1.0});
    for (double v : fso.l2(m)) k.t_kernel.lower_left.push_back({v, 1.0});
    k.t_kernel.lower_right.push_back({0.0, 1.0});
    double x = std::pow(w, -1.0 / at);
    double y = fso.big_f() / (fso.u() * std::pow(w, 1.0 / at));
    auto h = bivariate_h(k, x, y, sub);
    double pref = std::exp(-m1 * std::log(w) - std::log(at));
    return {h.value * pref, h.error * pref};
}

// int_0^inf g^{z1*at-1} e^{-kappa g^at} * optical-CDF-kernel(scale*g) dg.
MetricEval power_exp_optical(double kappa, double at, double z1, double scale,
                             const FsoLink& fso, int m, const Precision& sub) {
    GammaTriple k;
    k.upper_left.push_back({1.0, 1.0});
    k.upper_left.push_back({1.0 - z1, 1.0 / at});
    for (double v : fso.l1()) k.upper_right.push_back({v, 1.0});
    for (double v : fso.l2(m)) k.lower_left.push_back({v, 1.0});
    k.lower_right.push_back({0.0, 1.0});
    double x = scale / std::pow(kappa, 1.0 / at);
    auto h = fox_h(k, x, sub);
    double pref = std::exp(-z1 * std::log(kappa) - std::log(at));
    return {h.value * pref, h.error * pref};
}

struct SopTally {
    double sum = 0.0;     // accumulated series value
    double err = 0.0;     // accumulated absolute error
};

// Shared by the SOP bound and (via rs = 0) by PNSC.
SopTally sop_series(const SecrecyLinks& links, double theta,
                    const Precision& prec) {
    require_closed_form_shape(links);
    const RfLink& rf = links.main;
    const RfLink& ev = links.eve;
    const FsoLink& fso = links.fso;
    const double at = rf.alpha_tilde();
    const double kappa = rf.u2() * std::pow(theta, at) + ev.u2();
    const double ln_kappa = std::log(kappa);
    const double ln_theta = std::log(theta);
    const double sigma = fso.sigma();

    // First pass: per-term magnitude bound coef * H1; the optical factor
    // only removes mass (it is one minus a CDF inside the integral).
    struct Term {
        int n1, t1, n2;
        double coef, h1;
    };
    std::vector<Term> terms;
    double total = 0.0;
    for (int n1 = 0; n1 < rf.n_terms(); ++n1) {
        int w1 = static_cast<int>(std::round(rf.w1(n1)));
        for (int t1 = 0; t1 < w1; ++t1) {
            double lc1 = rf.ln_u4(n1, t1) + at * t1 * ln_theta;
            for (int n2 = 0; n2 < ev.n_terms(); ++n2) {
                double z1 = t1 + ev.w1(n2);
                double lh1 = std::lgamma(z1) - z1 * ln_kappa - std::log(at);
                double coef = std::exp(lc1 + ev.ln_u1(n2));
                double h1 = std::exp(lh1);
                terms.push_back({n1, t1, n2, coef, h1});
                total += coef * h1;
            }
        }
    }
    const double thr = 1e-3 * prec.rel_tol * total;

    Precision sub = prec;
    SopTally out;
    std::map<std::pair<int, int>, MetricEval> h2_memo;  // (t1+2*n2, m)
    for (const Term& t : terms) {
        if (t.coef * t.h1 < thr) {
            out.err += t.coef * t.h1;
            continue;
        }
        double z1 = t.t1 + ev.w1(t.n2);
        double inner = t.h1, inner_err = 0.0;
        for (int m = 1; m <= fso.n_terms(); ++m) {
            auto key = std::make_pair(t.t1 + 2 * t.n2, m);
            auto it = h2_memo.find(key);
            if (it == h2_memo.end()) {
                auto h2 = power_exp_optical(
                    kappa, at, z1, fso.big_f() * theta / fso.u(), fso, m, sub);
                it = h2_memo.emplace(key, h2).first;
            }
            inner -= sigma * fso.c_m(m) * it->second.value;
            inner_err += sigma * std::abs(fso.c_m(m)) * it->second.error;
        }
        out.sum += t.coef * inner;
        out.err += t.coef * inner_err;
    }
    return out;
}

}  // namespace

MetricEval asc_term_s1(const SecrecyLinks& links, int t1,
                       const Precision& prec) {
    prec.validate();
    require_closed_form_shape(links);
    return power_exp_cauchy(links.main.u2(), links.main.alpha_tilde(), t1, prec);
}

MetricEval asc_term_s2(const SecrecyLinks& links, int t_sum,
                       const Precision& prec) {
    prec.validate();
    require_closed_form_shape(links);
    return power_exp_cauchy(links.main.u2() + links.eve.u2(),
                            links.main.alpha_tilde(), t_sum, prec);
}

MetricEval asc_term_s3(const SecrecyLinks& links, int t1, int m,
                       const Precision& prec) {
    prec.validate();
    require_closed_form_shape(links);
    return power_exp_cauchy_optical(links.main.u2(), links.main.alpha_tilde(),
                                    t1, links.fso, m, prec);
}

MetricEval asc_term_s4(const SecrecyLinks& links, int t_sum, int m,
                       const Precision& prec) {
    prec.validate();
    require_closed_form_shape(links);
    return power_exp_cauchy_optical(links.main.u2() + links.eve.u2(),
                                    links.main.alpha_tilde(), t_sum, links.fso,
                                    m, prec);
}

MetricEval sop_term_h1(const SecrecyLinks& links, double rs, int t1, int n2) {
    require_closed_form_shape(links);
    const double at = links.main.alpha_tilde();
    const double theta = std::exp2(rs);
    const double kappa =
        links.main.u2() * std::pow(theta, at) + links.eve.u2();
    const double z1 = t1 + links.eve.w1(n2);
    double v = std::exp(std::lgamma(z1) - z1 * std::log(kappa) - std::log(at));
    return {v, 4e-16 * v};
}

MetricEval sop_term_h2(const SecrecyLinks& links, double rs, int t1, int n2,
                       int m, const Precision& prec) {
    prec.validate();
    require_closed_form_shape(links);
    const double at = links.main.alpha_tilde();
    const double theta = std::exp2(rs);
    const double kappa =
        links.main.u2() * std::pow(theta, at) + links.eve.u2();
    const double z1 = t1 + links.eve.w1(n2);
    return power_exp_optical(kappa, at, z1,
                             links.fso.big_f() * theta / links.fso.u(),
                             links.fso, m, prec);
}

MetricEval asc_quadrature(const SecrecyLinks& links, const Precision& prec) {
    prec.validate();
    auto f = [&](double g) {
        double fv = links.eve.cdf(g);
        if (fv <= 0.0) return 0.0;
        double sr = 1.0 - links.main.cdf(g);
        if (sr <= 0.0) return 0.0;
        double sd = 1.0 - links.fso.cdf(g);
        if (sd <= 0.0) return 0.0;
        return fv * sr * sd / (1.0 + g);
    };
    auto q = integrate_zero_inf(f, std::max(prec.rel_tol, 1e-7),
                                std::max(prec.abs_tol, 1e-11), 6000, true);
    return {q.value, q.error};
}

MetricEval sop_lower_quadrature(const SecrecyLinks& links, double rs,
                                const Precision& prec) {
    prec.validate();
    const double theta = std::exp2(rs);
    auto f = [&](double g) {
        double fv = links.eve.pdf(g);
        if (fv <= 0.0) return 0.0;
        double sr = 1.0 - links.main.cdf(theta * g);
        if (sr <= 0.0) return 0.0;
        double sd = 1.0 - links.fso.cdf(theta * g);
        if (sd <= 0.0) return 0.0;
        return fv * sr * sd;
    };
    auto q = integrate_zero_inf(f, std::max(prec.rel_tol, 1e-7),
                                std::max(prec.abs_tol, 1e-11), 6000, true);
    return {1.0 - q.value, q.error};
}

MetricEval pnsc_quadrature(const SecrecyLinks& links, const Precision& prec) {
    auto s = sop_lower_quadrature(links, 0.0, prec);
    return {1.0 - s.value, s.error};
}

MetricEval asc_closed_form(const SecrecyLinks& links, const Precision& prec) {
    prec.validate();
    require_closed_form_shape(links);
    const RfLink& rf = links.main;
    const RfLink& ev = links.eve;
    const FsoLink& fso = links.fso;
    const double at = rf.alpha_tilde();
    const double u2 = rf.u2();
    const double q2 = ev.u2();
    const double both = u2 + q2;
    const double sigma = fso.sigma();

    // Enumerate both series with magnitude bounds (the Cauchy factor and
    // the optical survival factor are both <= 1 inside the integrals).
    struct T1 {
        int n1, t1;
        double coef, bound;  // bound on the g-integral value
    };
    struct T2 {
        int tsum;
        double coef, bound;
    };
    std::vector<T1> single;
    std::map<int, double> joint_coef;  // summed |coef| per tsum
    double total = 0.0;
    for (int n1 = 0; n1 < rf.n_terms(); ++n1) {
        int w1 = static_cast<int>(std::round(rf.w1(n1)));
        for (int t1 = 0; t1 < w1; ++t1) {
            double c = std::exp(rf.ln_u4(n1, t1));
            double m1 = t1 + 1.0 / at;
            double b = std::exp(std::lgamma(m1) - m1 * std::log(u2)) / at;
            single.push_back({n1, t1, c, b});
            total += c * b;
            for (int n2 = 0; n2 < ev.n_terms(); ++n2) {
                int w2 = static_cast<int>(std::round(ev.w1(n2)));
                for (int t2 = 0; t2 < w2; ++t2) {
                    double cj = c * std::exp(ev.ln_u4(n2, t2));
                    joint_coef[t1 + t2] += cj;
                }
            }
        }
    }
    std::vector<T2> joint;
    for (const auto& [tsum, c] : joint_coef) {
        double m2 = tsum + 1.0 / at;
        double b = std::exp(std::lgamma(m2) - m2 * std::log(both)) / at;
        joint.push_back({tsum, c, b});
        total += c * b;
    }
    const double thr = 1e-3 * prec.rel_tol * total;

    Precision sub = prec;
    double value = 0.0, err = 0.0;
    std::map<int, MetricEval> s_memo;                   // plain terms by t
    std::map<std::pair<int, int>, MetricEval> o_memo;   // optical by (t, m)
    auto eval_group = [&](double w, int t, double coef, double sign) {
        auto it = s_memo.find(t);
        if (it == s_memo.end())
            it = s_memo.emplace(t, power_exp_cauchy(w, at, t, sub)).first;
        double inner = it->second.value;
        double inner_err = it->second.error;
        for (int m = 1; m <= fso.n_terms(); ++m) {
            auto key = std::make_pair(t, m);
            auto jt = o_memo.find(key);
            if (jt == o_memo.end())
                jt = o_memo
                         .emplace(key,
                                  power_exp_cauchy_optical(w, at, t, fso, m, sub))
                         .first;
            inner -= sigma * fso.c_m(m) * jt->second.value;
            inner_err += sigma * std::abs(fso.c_m(m)) * jt->second.error;
        }
        value += sign * coef * inner;
        err += coef * inner_err;
    };
    for (const T1& t : single) {
        if (t.coef * t.bound < thr) {
            err += t.coef * t.bound;
            continue;
        }
        eval_group(u2, t.t1, t.coef, 1.0);
    }
    // The joint series reuses the same integral shapes with the merged
    // exponent rate, so the memo tables are rebuilt for it.
    s_memo.clear();
    o_memo.clear();
    for (const T2& t : joint) {
        if (t.coef * t.bound < thr) {
            err += t.coef * t.bound;
            continue;
        }
        eval_group(both, t.tsum, t.coef, -1.0);
    }
    return {value, err + 1e-14 * std::abs(value)};
}

MetricEval sop_lower_closed_form(const SecrecyLinks& links, double rs,
                                 const Precision& prec) {
    prec.validate();
    auto t = sop_series(links, std::exp2(rs), prec);
    return {1.0 - t.sum, t.err};
}

MetricEval pnsc_closed_form(const SecrecyLinks& links, const Precision& prec) {
    prec.validate();
    auto t = sop_series(links, 1.0, prec);
    return {t.sum, t.err};
}

}  // namespace rfso
