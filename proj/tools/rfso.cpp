// Command-line front end: scenario sweeps, presets, figure reproduction.
// Exit codes: 0 ok, 2 scenario parse error, 3 numeric failure,
// 4 agreement failure under --strict.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfso/errors.hpp"
#include "rfso/montecarlo.hpp"
#include "rfso/scenario.hpp"
#include "rfso/secrecy.hpp"

namespace {

using namespace rfso;

struct MethodSet {
    bool closed = false;
    bool quad = true;
    bool mc = true;
};

struct Row {
    double sweep_db;
    std::string metric;
    std::optional<MetricEval> closed, quad;
    std::optional<McEstimate> mc;
    bool agree = true;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void emit_header(std::ostream& os) {
    os << "sweep_value_db,metric,value_closed,err_closed,value_quad,err_quad,"
          "value_mc,mc_ci,agreement_flag\n";
}

void emit_row(std::ostream& os, const Row& r) {
    os << fmt(r.sweep_db) << ',' << r.metric << ',';
    if (r.closed) os << fmt(r.closed->value) << ',' << fmt(r.closed->error);
    else os << ',';
    os << ',';
    if (r.quad) os << fmt(r.quad->value) << ',' << fmt(r.quad->error);
    else os << ',';
    os << ',';
    if (r.mc) os << fmt(r.mc->value) << ',' << fmt(r.mc->ci_half);
    else os << ',';
    os << ',' << (r.agree ? "true" : "false") << '\n';
}

bool check_agreement(const Row& r) {
    if (r.closed && r.quad &&
        std::abs(r.closed->value - r.quad->value) >
            r.closed->error + r.quad->error + 1e-9)
        return false;
    for (const auto* a : {&r.closed, &r.quad}) {
        if (!a->has_value() || !r.mc) continue;
        double band = 3.0 * std::max(r.mc->std_error, 1e-12) + (*a)->error;
        if (std::abs((*a)->value - r.mc->value) > band) return false;
    }
    return true;
}

std::vector<Row> run_sweep(const Scenario& sc, const std::string& metric,
                           const MethodSet& ms, std::uint64_t seed,
                           std::uint64_t n_samples) {
    std::vector<Row> rows;
    for (double db : sc.sweep_values()) {
        Scenario p = sc.at_sweep_value(db);
        RfLink main_l(p.rf_main);
        RfLink eve_l(p.rf_eve);
        FsoLink fso_l(p.fso);
        SecrecyLinks links{main_l, fso_l, eve_l};
        Precision prec;
        prec.rel_tol = 1e-6;
        Row row;
        row.sweep_db = db;
        row.metric = metric;
        if (ms.closed) {
            if (metric == "asc") row.closed = asc_closed_form(links, prec);
            else if (metric == "sop")
                row.closed = sop_lower_closed_form(links, p.rs_bits, prec);
            else row.closed = pnsc_closed_form(links, prec);
        }
        if (ms.quad) {
            if (metric == "asc") row.quad = asc_quadrature(links, prec);
            else if (metric == "sop")
                row.quad = sop_lower_quadrature(links, p.rs_bits, prec);
            else row.quad = pnsc_quadrature(links, prec);
        }
        if (ms.mc) {
            FsoSampler smp(fso_l);
            McConfig cfg;
            cfg.seed = seed;
            cfg.n_samples = n_samples;
            McSecrecy est = mc_secrecy(main_l, smp, eve_l, p.rs_bits, cfg);
            if (metric == "asc") row.mc = est.asc;
            else if (metric == "sop") row.mc = est.sop_lower;
            else row.mc = est.pnsc;
        }
        row.agree = check_agreement(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_run(const std::string& path, std::vector<std::string> metrics,
            std::vector<std::string> methods, bool strict,
            std::optional<std::uint64_t> seed,
            std::optional<std::uint64_t> samples) {
    Scenario sc;
    try {
        sc = load_scenario(path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    MethodSet ms;
    if (!methods.empty()) {
        ms = {false, false, false};
        for (const auto& m : methods) {
            if (m == "closed_form" || m == "closed") ms.closed = true;
            else if (m == "quadrature" || m == "quad") ms.quad = true;
            else if (m == "monte_carlo" || m == "mc") ms.mc = true;
            else {
                std::cerr << "unknown method '" << m
                          << "' (closed_form|quadrature|monte_carlo)\n";
                return 2;
            }
        }
    }
    if (metrics.empty()) metrics = {"asc", "sop", "pnsc"};
    for (const auto& m : metrics)
        if (m != "asc" && m != "sop" && m != "pnsc") {
            std::cerr << "unknown metric '" << m << "' (asc|sop|pnsc)\n";
            return 2;
        }
    bool all_agree = true;
    try {
        emit_header(std::cout);
        for (const auto& metric : metrics) {
            auto rows = run_sweep(sc, metric, ms, seed.value_or(sc.mc_seed),
                                  samples.value_or(sc.mc_n_samples));
            for (const auto& r : rows) {
                emit_row(std::cout, r);
                all_agree = all_agree && r.agree;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    if (strict && !all_agree) {
        std::cerr << "method agreement failure under --strict\n";
        return 4;
    }
    return 0;
}

int cmd_preset(const std::string& name) {
    try {
        std::cout << preset_scenario(name);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

int cmd_figure(int fig_id, const std::string& out_dir,
               std::optional<std::uint64_t> samples) {
    std::vector<FigureCurve> curves;
    try {
        curves = figure_curves(fig_id);
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::filesystem::create_directories(out_dir);
    try {
        for (const auto& c : curves) {
            auto rows =
                run_sweep(c.scenario, c.metric, MethodSet{}, c.scenario.mc_seed,
                          samples.value_or(c.scenario.mc_n_samples));
            std::string fname = out_dir + "/fig" + std::to_string(fig_id) +
                                "_" + c.name + ".csv";
            std::ofstream os(fname);
            emit_header(os);
            for (const auto& r : rows) emit_row(os, r);
            std::cerr << "wrote " << fname << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-hop RF-FSO secrecy metrics"};
    app.require_subcommand(1);

    std::string scenario_path, preset_name, out_dir = ".";
    std::vector<std::string> metrics, methods;
    bool strict = false;
    int fig_id = 0;
    std::optional<std::uint64_t> seed, samples;

    auto* run = app.add_subcommand("run", "evaluate a scenario file sweep");
    run->add_option("file", scenario_path)->required();
    run->add_option("--metrics", metrics)->delimiter(',');
    run->add_option("--methods", methods)->delimiter(',');
    run->add_flag("--strict", strict);
    run->add_option("--seed", seed);
    run->add_option("--samples", samples);

    auto* pre = app.add_subcommand("preset", "print a classical-model scenario");
    pre->add_option("name", preset_name)->required();

    auto* fig = app.add_subcommand("reproduce-figure",
                                   "sweep the curves of one figure to CSV files");
    fig->add_option("id", fig_id)->required();
    fig->add_option("--out-dir", out_dir);
    fig->add_option("--samples", samples);

    CLI11_PARSE(app, argc, argv);

    if (run->parsed())
        return cmd_run(scenario_path, metrics, methods, strict, seed, samples);
    if (pre->parsed()) return cmd_preset(preset_name);
    return cmd_figure(fig_id, out_dir, samples);
}
