#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rfso/errors.hpp"
#include "rfso/scenario.hpp"

using namespace rfso;

namespace {

std::string rfso_bin() {
    const char* p = std::getenv("RFSO_BIN");
    return p ? p : "./rfso";
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = rfso_bin() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string write_temp(const std::string& text) {
    static int counter = 0;
    std::string path =
        "cli_test_scenario_" + std::to_string(counter++) + ".cfg";
    std::ofstream(path) << text;
    return path;
}

const char* kSmallScenario =
    "rf_main.alpha = 4\n"
    "rf_main.eta = 1.0001\n"
    "rf_main.mu = 1\n"
    "rf_main.omega_db = 5\n"
    "rf_eve.alpha = 4\n"
    "rf_eve.eta = 1.0001\n"
    "rf_eve.mu = 1\n"
    "rf_eve.omega_db = 0\n"
    "fso.alpha_d = 2.296\n"
    "fso.beta_d = 2\n"
    "fso.g_d = 2\n"
    "fso.omega_cap_d = 2\n"
    "fso.epsilon = 6.7\n"
    "fso.detection = hd\n"
    "fso.u_r_db = 10\n"
    "rs_bits = 0.1\n"
    "mc.n_samples = 50000\n"
    "sweep.key = rf_main.omega_db\n"
    "sweep.from_db = 0\n"
    "sweep.to_db = 10\n"
    "sweep.points = 3\n";

}  // namespace

TEST_CASE("presets parse back into valid scenarios") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        Scenario s = parse_scenario(preset_scenario(name));
        CHECK_NOTHROW(s.validate());
        CHECK(s.sweep.points == 9);
        CHECK(s.fso.eps == doctest::Approx(6.7));
    }
    Scenario ray = parse_scenario(preset_scenario("rayleigh-gg"));
    CHECK(ray.rf_main.alpha == doctest::Approx(2.0));
    CHECK(ray.rf_main.mu == doctest::Approx(0.5));
    CHECK(ray.rf_main.omega == doctest::Approx(10.0));  // 10 dB
    CHECK(ray.fso.det == Detection::HD);
    CHECK_THROWS_AS(preset_scenario("no-such-model"), ParseError);
}

TEST_CASE("parser reports unknown and duplicate keys with line numbers") {
    try {
        parse_scenario("rf_main.alpha = 4\nbogus.key = 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("bogus.key") != std::string::npos);
        CHECK(msg.find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(
        parse_scenario("rf_main.alpha = 4\nrf_main.alpha = 2\n"), ParseError);
    CHECK_THROWS_AS(parse_scenario("rf_main.alpha = not-a-number\n"),
                    ParseError);
}

TEST_CASE("coherent-power forms are mutually exclusive") {
    std::string both = std::string(kSmallScenario) + "fso.omega = 1.0\n";
    CHECK_THROWS_AS(parse_scenario(both), ParseError);
    // constituent quartet alone works
    std::string quartet(kSmallScenario);
    auto pos = quartet.find("fso.omega_cap_d = 2\n");
    quartet.erase(pos, std::string("fso.omega_cap_d = 2\n").size());
    quartet += "fso.omega = 1.3265\nfso.b0 = 0.1\nfso.rho = 0.5\n"
               "fso.phase_diff = 0.7\n";
    Scenario s = parse_scenario(quartet);
    CHECK(s.fso.omega_cap > 0.0);
}

TEST_CASE("comments, blank lines and sweep expansion") {
    std::string text = std::string("# header comment\n\n") + kSmallScenario;
    Scenario s = parse_scenario(text);
    auto vals = s.sweep_values();
    REQUIRE(vals.size() == 3);
    CHECK(vals.front() == doctest::Approx(0.0));
    CHECK(vals.back() == doctest::Approx(10.0));
    Scenario at = s.at_sweep_value(7.0);
    CHECK(at.rf_main.omega == doctest::Approx(db_to_linear(7.0)));

    s.sweep.key = "fso.u_r_db";
    Scenario at2 = s.at_sweep_value(13.0);
    CHECK(at2.fso.u == doctest::Approx(db_to_linear(13.0)));
}

TEST_CASE("figure curve sets") {
    for (int fig : {2, 5, 9, 13}) {
        auto curves = figure_curves(fig);
        CAPTURE(fig);
        CHECK(!curves.empty());
        for (const auto& c : curves) CHECK_NOTHROW(c.scenario.validate());
    }
    CHECK_THROWS_AS(figure_curves(1), DomainError);
    CHECK_THROWS_AS(figure_curves(14), DomainError);
}

TEST_CASE("binary: preset subcommand round-trips") {
    auto r = run_cli("preset rayleigh-gg");
    REQUIRE(r.exit_code == 0);
    Scenario s = parse_scenario(r.out);
    CHECK(s.rf_main.mu == doctest::Approx(0.5));
    CHECK(run_cli("preset nonsense").exit_code == 2);
}

TEST_CASE("binary: run produces the documented csv") {
    std::string path = write_temp(kSmallScenario);
    auto r = run_cli("run " + path + " --metrics asc --methods quadrature");
    std::remove(path.c_str());
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line ==
          "sweep_value_db,metric,value_closed,err_closed,value_quad,err_quad,"
          "value_mc,mc_ci,agreement_flag");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(line.find(",asc,") != std::string::npos);
        CHECK(line.substr(line.size() - 4) == "true");
    }
    CHECK(rows == 3);
}

TEST_CASE("binary: error exit codes") {
    std::string bad = write_temp("bogus.key = 1\n");
    CHECK(run_cli("run " + bad).exit_code == 2);
    std::remove(bad.c_str());
    CHECK(run_cli("run does_not_exist.cfg").exit_code == 2);

    // closed form on alpha/2 = 1.5 is a numeric domain failure
    std::string frac(kSmallScenario);
    auto p1 = frac.find("rf_main.alpha = 4");
    frac.replace(p1, 17, "rf_main.alpha = 3");
    auto p2 = frac.find("rf_eve.alpha = 4");
    frac.replace(p2, 16, "rf_eve.alpha = 3");
    std::string path = write_temp(frac);
    CHECK(run_cli("run " + path + " --metrics asc --methods closed_form")
              .exit_code == 3);
    std::remove(path.c_str());
}
