// End-to-end acceptance runner: prints one PASS/FAIL line per criterion
// and exits non-zero if any fail. Budgets are wall-clock seconds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "identity_set.hpp"
#include "rfso/montecarlo.hpp"
#include "rfso/quadrature.hpp"
#include "rfso/scenario.hpp"
#include "rfso/secrecy.hpp"

using namespace rfso;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const std::string& name, bool pass,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", idx,
                name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

char buf[256];

// --- 1: special-function identity battery ---------------------------------

void criterion_identities() {
    auto t0 = Clock::now();
    auto ids = testing::specfun_identities();
    int bad = 0;
    double worst = 0.0;
    for (const auto& id : ids) {
        double dev = std::abs(id.got - id.want) /
                     std::max(std::abs(id.want), 1e-30);
        worst = std::max(worst, dev);
        if (dev > 1e-8) ++bad;
    }
    double el = seconds_since(t0);
    std::snprintf(buf, sizeof buf, "%zu identities, worst rel dev %.2g, %.1fs",
                  ids.size(), worst, el);
    report(1, "special-function identities within 1e-8",
           ids.size() >= 30 && bad == 0 && el < 30.0, buf);
}

// --- 2: optical channel grid: density norm and sampler distribution -------

double ks_distance(std::vector<double>& xs, const FsoLink& link, int stride) {
    std::sort(xs.begin(), xs.end());
    double d = 0.0;
    const std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; i += stride) {
        double f = link.cdf(xs[i]);
        d = std::max({d, std::abs(f - static_cast<double>(i) / n),
                      std::abs(f - static_cast<double>(i + 1) / n)});
    }
    // the stride can skip the true supremum by at most stride/n
    return d + static_cast<double>(stride) / n;
}

void criterion_fso_grid() {
    auto t0 = Clock::now();
    struct Turb { double a; int b; } turb[] = {{2.296, 2}, {4.2, 3}, {8.0, 4}};
    bool ok = true;
    double worst_norm = 0.0, worst_ks = 0.0;
    const std::size_t n = 1000000;
    std::vector<double> xs(n);
    for (const auto& tb : turb)
        for (Detection det : {Detection::HD, Detection::IMDD})
            for (double eps : {1.0, 6.7}) {
                FsoChannelParams p{tb.a, tb.b, 0.5, 1.5, eps, det, 10.0};
                FsoLink link(p);
                auto norm = integrate_zero_inf(
                    [&](double g) { return link.pdf(g); }, 1e-8, 1e-11, 100000,
                    true);
                worst_norm = std::max(worst_norm, std::abs(norm.value - 1.0));
                FsoSampler smp(link);
                for (std::size_t i = 0; i < n; ++i) {
                    SampleRng rng(424242, 1, i);
                    xs[i] = smp.sample(rng);
                }
                double d = ks_distance(xs, link, 199);
                worst_ks = std::max(worst_ks, d);
                ok = ok && std::abs(norm.value - 1.0) < 1e-6 &&
                     d < 1.95 / std::sqrt(static_cast<double>(n));
            }
    double el = seconds_since(t0);
    std::snprintf(buf, sizeof buf,
                  "12 cases, worst |norm-1| %.2g, worst KS %.2g (bound %.2g), "
                  "%.0fs",
                  worst_norm, worst_ks, 1.95 / std::sqrt((double)n), el);
    report(2, "optical density norm and sampler distribution", ok && el < 900.0,
           buf);
}

// --- 3: three-route agreement -------------------------------------------

struct Scn {
    std::string name;
    RfFadingParams rm, re;
    FsoChannelParams fp;
    std::string metric;
    double rs;
};

void criterion_three_routes() {
    auto t0 = Clock::now();
    std::vector<Scn> scns;
    struct Turb { double a; int b; } turb[] = {{2.296, 2}, {4.2, 3}, {8.0, 4}};
    int k = 0;
    for (const auto& tb : turb)
        for (Detection det : {Detection::HD, Detection::IMDD}) {
            Scn s{"grid" + std::to_string(k),
                  RfFadingParams::from_db(4.0, 1.0001, 1.0, 5.0),
                  RfFadingParams::from_db(4.0, 1.0001, 1.0, 0.0),
                  {tb.a, tb.b, 0.5, 1.5, 6.7, det, db_to_linear(10.0)},
                  k % 3 == 0 ? "asc" : (k % 3 == 1 ? "sop" : "pnsc"),
                  0.1};
            scns.push_back(s);
            ++k;
        }
    // mid-sweep points of three published-figure curve sets
    for (int fig : {2, 4, 7}) {
        auto curves = figure_curves(fig);
        const auto& c = curves.front();
        auto vals = c.scenario.sweep_values();
        Scenario sc = c.scenario.at_sweep_value(vals[vals.size() / 2]);
        scns.push_back({"fig" + std::to_string(fig), sc.rf_main, sc.rf_eve,
                        sc.fso, c.metric, sc.rs_bits});
    }

    bool ok = true;
    double worst_cq = 0.0, worst_mc = 0.0;
    for (const auto& s : scns) {
        RfLink main_l(s.rm), eve_l(s.re);
        FsoLink fso_l(s.fp);
        SecrecyLinks links{main_l, fso_l, eve_l};
        Precision prec;
        prec.rel_tol = 1e-6;
        MetricEval c, q;
        if (s.metric == "asc") {
            c = asc_closed_form(links, prec);
            q = asc_quadrature(links, prec);
        } else if (s.metric == "sop") {
            c = sop_lower_closed_form(links, s.rs, prec);
            q = sop_lower_quadrature(links, s.rs, prec);
        } else {
            c = pnsc_closed_form(links, prec);
            q = pnsc_quadrature(links, prec);
        }
        double scale = std::max({std::abs(c.value), std::abs(q.value), 1e-12});
        double cq = std::abs(c.value - q.value) / scale;
        worst_cq = std::max(worst_cq, cq);
        bool pair_ok = std::abs(c.value - q.value) <=
                       c.error + q.error + 1e-6 * scale;

        FsoSampler smp(fso_l);
        McConfig cfg;
        cfg.n_samples = 10000000;
        McSecrecy mc = mc_secrecy(main_l, smp, eve_l, s.rs, cfg);
        McEstimate est = s.metric == "asc"
                             ? mc.asc
                             : (s.metric == "sop" ? mc.sop_lower : mc.pnsc);
        double dev = std::abs(est.value - q.value);
        double band = 4.0 * est.std_error + q.error + 1e-6;
        worst_mc = std::max(worst_mc, dev / std::max(est.std_error, 1e-12));
        ok = ok && pair_ok && dev <= band;
        if (!(pair_ok && dev <= band))
            std::printf("  disagreement at %s/%s: closed=%.8g quad=%.8g "
                        "mc=%.8g+-%.2g\n",
                        s.name.c_str(), s.metric.c_str(), c.value, q.value,
                        est.value, est.std_error);
    }
    double el = seconds_since(t0);
    std::snprintf(buf, sizeof buf,
                  "%zu scenarios, worst closed/quad rel %.2g, worst MC dev "
                  "%.1f sigma, %.0fs",
                  scns.size(), worst_cq, worst_mc, el);
    report(3, "closed form, quadrature and Monte Carlo agree", ok && el < 1800.0,
           buf);
}

// --- 4: outage bound ordering under common random numbers ----------------

void criterion_bound_ordering() {
    RfLink main_l(RfFadingParams::from_db(4.0, 2.0, 1.0, 5.0));
    FsoLink fso_l(FsoChannelParams{2.296, 2, 0.5, 1.5, 6.7, Detection::HD,
                                   db_to_linear(10.0)});
    FsoSampler smp(fso_l);
    RfLink eve_l(RfFadingParams::from_db(4.0, 2.0, 1.0, 0.0));
    McConfig cfg;
    cfg.n_samples = 1000000;
    bool ok = true;
    for (double rs : {0.3, 1.0, 2.0}) {
        McSecrecy r = mc_secrecy(main_l, smp, eve_l, rs, cfg);
        ok = ok && r.sop_lower.value <= r.sop_exact.value;
    }
    McSecrecy r0 = mc_secrecy(main_l, smp, eve_l, 0.0, cfg);
    ok = ok && r0.sop_lower.value == r0.sop_exact.value;
    report(4, "outage bound below exact outage, equal at rate zero", ok,
           ok ? "ordering holds for rs in {0, 0.3, 1, 2}" : "ordering violated");
}

// --- 5: qualitative trends of the published figures ----------------------

void criterion_trends() {
    Precision prec;
    prec.rel_tol = 1e-7;
    auto asc_of = [&](FsoChannelParams fp, double eve_db) {
        RfLink m(RfFadingParams::from_db(4.0, 1.0001, 1.0, 10.0));
        RfLink e(RfFadingParams::from_db(4.0, 1.0001, 1.0, eve_db));
        FsoLink f(fp);
        SecrecyLinks links{m, f, e};
        return asc_quadrature(links, prec).value;
    };
    bool ok = true;
    std::string fails;

    FsoChannelParams base{4.2, 3, 0.5, 1.5, 6.7, Detection::HD,
                          db_to_linear(10.0)};
    FsoChannelParams imdd = base;
    imdd.det = Detection::IMDD;
    if (!(asc_of(base, 0.0) > asc_of(imdd, 0.0))) { ok = false; fails += " det"; }

    FsoChannelParams strong = base, weak = base;
    strong.alpha_d = 2.296; strong.beta_d = 2;
    weak.alpha_d = 8.0; weak.beta_d = 4;
    double a_s = asc_of(strong, 0.0), a_m = asc_of(base, 0.0),
           a_w = asc_of(weak, 0.0);
    if (!(a_w > a_m && a_m > a_s)) { ok = false; fails += " turbulence"; }

    FsoChannelParams severe = base;
    severe.eps = 1.0;
    if (!(asc_of(base, 0.0) > asc_of(severe, 0.0))) { ok = false; fails += " eps"; }

    if (!(asc_of(base, -5.0) > asc_of(base, 0.0))) { ok = false; fails += " eve"; }

    // outage grows with rate, and floors at high main-link SNR
    RfLink eve(RfFadingParams::from_db(4.0, 1.0001, 1.0, 5.0));
    FsoLink fso(FsoChannelParams{2.296, 2, 0.5, 1.5, 1.0, Detection::HD,
                                 db_to_linear(10.0)});
    auto sop_at = [&](double main_db, double rs) {
        RfLink m(RfFadingParams::from_db(4.0, 1.0001, 1.0, main_db));
        SecrecyLinks links{m, fso, eve};
        return sop_lower_quadrature(links, rs, prec).value;
    };
    if (!(sop_at(10.0, 2.0) > sop_at(10.0, 0.5) &&
          sop_at(10.0, 0.5) > sop_at(10.0, 0.1))) {
        ok = false;
        fails += " rate";
    }
    double s30 = sop_at(30.0, 0.1), s40 = sop_at(40.0, 0.1);
    if (!(std::abs(s40 - s30) < 0.05 * s30)) { ok = false; fails += " floor"; }

    report(5, "figure-level qualitative trends", ok,
           ok ? "detection, turbulence, pointing, eavesdropper, rate, floor"
              : "failed:" + fails);
}

// --- 6: classical presets against an independent oracle -------------------

double gg_pointing_cdf(const FsoChannelParams& p, double gamma) {
    const double e2 = p.eps * p.eps;
    const double mean_il = (p.g + p.omega_cap) * e2 / (e2 + 1.0);
    const double c = mean_il * std::pow(gamma / p.u, 1.0 / p.r());
    const double ab = p.alpha_d * static_cast<double>(p.beta_d);
    const double hp = 0.5 * (p.alpha_d + p.beta_d);
    const double nu = p.alpha_d - p.beta_d;
    const double norm =
        2.0 * std::pow(ab, hp) / (std::tgamma(p.alpha_d) * std::tgamma(p.beta_d));
    auto q = integrate_zero_inf(
        [&](double i) {
            double pdf = norm * std::pow(i, hp - 1.0) *
                         std::cyl_bessel_k(nu, 2.0 * std::sqrt(ab * i));
            return pdf * std::pow(std::min(1.0, c / i), e2);
        },
        1e-9, 1e-12, 100000, true);
    return q.value;
}

void criterion_presets() {
    auto t0 = Clock::now();
    bool ok = true;
    double worst = 0.0;
    for (const std::string name : {"rayleigh-gg", "nakagami-gg"}) {
        Scenario sc = parse_scenario(preset_scenario(name));
        for (double db : {0.0, 10.0, 20.0, 30.0, 40.0}) {
            Scenario p = sc.at_sweep_value(db);
            RfLink main_l(p.rf_main), eve_l(p.rf_eve);
            FsoLink fso_l(p.fso);
            SecrecyLinks links{main_l, fso_l, eve_l};
            Precision prec;
            prec.rel_tol = 1e-7;
            double lib = sop_lower_quadrature(links, p.rs_bits, prec).value;

            // fully independent route: classical closed-form RF laws and
            // the two-gamma pointing integral for the optical hop
            const double theta = std::exp2(p.rs_bits);
            const double wm = p.rf_main.omega, wv = p.rf_eve.omega;
            auto rf_cdf = [&](double g, double w) {
                if (name == "rayleigh-gg") return -std::expm1(-g / w);
                double z = 2.0 * g / w;
                return 1.0 - std::exp(-z) * (1.0 + z);
            };
            auto rf_pdf = [&](double g, double w) {
                if (name == "rayleigh-gg") return std::exp(-g / w) / w;
                double z = 2.0 * g / w;
                return std::exp(-z) * z * 2.0 / w;
            };
            auto q = integrate_zero_inf(
                [&](double g) {
                    double surv_r = 1.0 - rf_cdf(theta * g, wm);
                    if (surv_r <= 0.0) return 0.0;
                    double surv_d = 1.0 - gg_pointing_cdf(p.fso, theta * g);
                    if (surv_d <= 0.0) return 0.0;
                    return rf_pdf(g, wv) * surv_r * surv_d;
                },
                1e-6, 1e-9, 3000, true);
            double oracle = 1.0 - q.value;
            worst = std::max(worst, std::abs(lib - oracle));
            ok = ok && std::abs(lib - oracle) < 1e-3;
        }
    }
    double el = seconds_since(t0);
    std::snprintf(buf, sizeof buf, "worst |lib - oracle| %.2g, %.0fs", worst,
                  el);
    report(6, "classical presets match independent oracles", ok, buf);
}

// --- 7: determinism -------------------------------------------------------

void criterion_determinism() {
    RfLink main_l(RfFadingParams::from_db(4.0, 2.0, 1.0, 5.0));
    FsoLink fso_l(FsoChannelParams{4.2, 3, 0.5, 1.5, 6.7, Detection::HD,
                                   db_to_linear(10.0)});
    FsoSampler smp(fso_l);
    RfLink eve_l(RfFadingParams::from_db(4.0, 2.0, 1.0, 0.0));
    McConfig cfg;
    cfg.n_samples = 500000;
    cfg.n_streams = 1;
    McSecrecy a = mc_secrecy(main_l, smp, eve_l, 0.1, cfg);
    cfg.n_streams = 0;  // all hardware threads
    McSecrecy b = mc_secrecy(main_l, smp, eve_l, 0.1, cfg);
    cfg.n_streams = 5;
    McSecrecy c = mc_secrecy(main_l, smp, eve_l, 0.1, cfg);
    bool ok = a.asc.value == b.asc.value && b.asc.value == c.asc.value &&
              a.sop_exact.value == b.sop_exact.value &&
              a.pnsc.std_error == b.pnsc.std_error &&
              b.sop_lower.value == c.sop_lower.value;

    SecrecyLinks links{main_l, fso_l, eve_l};
    Precision prec;
    prec.rel_tol = 1e-6;
    ok = ok && asc_closed_form(links, prec).value ==
                   asc_closed_form(links, prec).value;
    report(7, "bit-identical results across thread counts and reruns", ok,
           ok ? "MC and closed form reproduce exactly" : "mismatch");
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion_identities();
    criterion_fso_grid();
    criterion_three_routes();
    criterion_bound_ordering();
    criterion_trends();
    criterion_presets();
    criterion_determinism();
    std::printf("%s: %d of 7 criteria failed, total %.0fs\n",
                g_failures ? "FAILURE" : "SUCCESS", g_failures,
                seconds_since(t0));
    return g_failures ? 1 : 0;
}
