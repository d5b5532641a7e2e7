#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfso/fso_channel.hpp"
#include "rfso/rf_channel.hpp"

namespace rfso {

// Swept parameter of a scenario file; the axis is always in dB.
struct SweepSpec {
    std::string key = "rf_main.omega_db";
    double from_db = 0.0;
    double to_db = 30.0;
    int points = 7;
};

// Full wiretap configuration plus the sweep and MC settings carried in
// a scenario file.
struct Scenario {
    RfFadingParams rf_main{4.0, 1.0001, 1.0, 10.0};
    RfFadingParams rf_eve{4.0, 1.0001, 1.0, 1.0};
    FsoChannelParams fso{2.296, 2, 2.0, 2.0, 6.7, Detection::HD, 10.0};
    double rs_bits = 0.1;
    std::uint64_t mc_seed = 12345;
    std::uint64_t mc_n_samples = 1000000;
    SweepSpec sweep;

    void validate() const;
    // Returns a copy with the swept key set to value_db.
    Scenario at_sweep_value(double value_db) const;
    std::vector<double> sweep_values() const;
};

// Parses key=value scenario text ('#' comments, blank lines ignored).
// Unknown keys or malformed values raise ParseError naming the key and
// line number.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// Table-row presets; returns scenario file text that parse_scenario
// round-trips. Valid names: alpha-mu-malaga, eta-mu-malaga,
// nakagami-gg, rayleigh-gg, weibull-lognormal.
std::string preset_scenario(const std::string& name);
std::vector<std::string> preset_names();

// One plotted curve of a figure: a label and a ready-to-run scenario.
struct FigureCurve {
    std::string name;    // file-name friendly label
    std::string metric;  // asc | sop | pnsc
    Scenario scenario;
};

// Curve set for figures 2..13 (1 is the system diagram).
std::vector<FigureCurve> figure_curves(int fig_id);

}  // namespace rfso
