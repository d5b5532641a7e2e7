#include "rfso/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "rfso/errors.hpp"

namespace rfso {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key, int line) {
    std::size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad numeric value for key '" + key + "' on line " +
                         std::to_string(line));
    }
    if (pos != v.size())
        throw ParseError("bad numeric value for key '" + key + "' on line " +
                         std::to_string(line));
    return x;
}

}  // namespace

void Scenario::validate() const {
    rf_main.validate();
    rf_eve.validate();
    fso.validate();
    if (rs_bits < 0.0) throw DomainError("Scenario: rs_bits must be >= 0");
    if (sweep.points < 1) throw DomainError("Scenario: sweep.points must be >= 1");
    if (sweep.key != "rf_main.omega_db" && sweep.key != "rf_eve.omega_db" &&
        sweep.key != "fso.u_r_db")
        throw DomainError("Scenario: sweep.key must be one of rf_main.omega_db, "
                          "rf_eve.omega_db, fso.u_r_db");
}

Scenario Scenario::at_sweep_value(double value_db) const {
    Scenario s = *this;
    double lin = db_to_linear(value_db);
    if (sweep.key == "rf_main.omega_db")
        s.rf_main.omega = lin;
    else if (sweep.key == "rf_eve.omega_db")
        s.rf_eve.omega = lin;
    else
        s.fso.u = lin;
    return s;
}

std::vector<double> Scenario::sweep_values() const {
    std::vector<double> v;
    if (sweep.points == 1) {
        v.push_back(sweep.from_db);
        return v;
    }
    for (int i = 0; i < sweep.points; ++i)
        v.push_back(sweep.from_db +
                    (sweep.to_db - sweep.from_db) * i / (sweep.points - 1));
    return v;
}

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    std::map<std::string, double> vals;
    std::string detection;
    int line_no = 0;
    std::istringstream in(text);
    std::string raw;
    static const char* kNumericKeys[] = {
        "rf_main.alpha", "rf_main.eta",  "rf_main.mu",    "rf_main.omega_db",
        "rf_eve.alpha",  "rf_eve.eta",   "rf_eve.mu",     "rf_eve.omega_db",
        "fso.alpha_d",   "fso.beta_d",   "fso.g_d",       "fso.omega_cap_d",
        "fso.omega",     "fso.b0",       "fso.rho",       "fso.phase_diff",
        "fso.epsilon",   "fso.u_r_db",   "rs_bits",       "mc.seed",
        "mc.n_samples",  "sweep.from_db", "sweep.to_db",  "sweep.points"};
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("missing '=' on line " + std::to_string(line_no));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "fso.detection") {
            if (val != "hd" && val != "imdd")
                throw ParseError("fso.detection must be hd or imdd (line " +
                                 std::to_string(line_no) + ")");
            detection = val;
            continue;
        }
        if (key == "sweep.key") {
            s.sweep.key = val;
            continue;
        }
        bool known = false;
        for (const char* k : kNumericKeys) known = known || key == k;
        if (!known)
            throw ParseError("unknown key '" + key + "' on line " +
                             std::to_string(line_no));
        if (vals.count(key))
            throw ParseError("duplicate key '" + key + "' on line " +
                             std::to_string(line_no));
        vals[key] = to_double(val, key, line_no);
    }

    auto take = [&](const std::string& k, double* dst) {
        auto it = vals.find(k);
        if (it != vals.end()) {
            *dst = it->second;
            vals.erase(it);
        }
    };
    double v;
    auto take_db = [&](const std::string& k, double* dst) {
        auto it = vals.find(k);
        if (it != vals.end()) {
            *dst = db_to_linear(it->second);
            vals.erase(it);
        }
    };
    take("rf_main.alpha", &s.rf_main.alpha);
    take("rf_main.eta", &s.rf_main.eta);
    take("rf_main.mu", &s.rf_main.mu);
    take_db("rf_main.omega_db", &s.rf_main.omega);
    take("rf_eve.alpha", &s.rf_eve.alpha);
    take("rf_eve.eta", &s.rf_eve.eta);
    take("rf_eve.mu", &s.rf_eve.mu);
    take_db("rf_eve.omega_db", &s.rf_eve.omega);

    bool has_cap = vals.count("fso.omega_cap_d") > 0;
    bool has_quartet = vals.count("fso.omega") || vals.count("fso.b0") ||
                       vals.count("fso.rho") || vals.count("fso.phase_diff");
    if (has_cap && has_quartet)
        throw ParseError(
            "give either fso.omega_cap_d or the fso.omega/b0/rho/phase_diff "
            "quartet, not both");
    take("fso.alpha_d", &s.fso.alpha_d);
    if (vals.count("fso.beta_d")) {
        v = vals["fso.beta_d"];
        if (v != std::floor(v) || v < 1)
            throw ParseError("fso.beta_d must be a positive integer");
        s.fso.beta_d = static_cast<int>(v);
        vals.erase("fso.beta_d");
    }
    take("fso.epsilon", &s.fso.eps);
    take_db("fso.u_r_db", &s.fso.u);
    if (!detection.empty())
        s.fso.det = detection == "hd" ? Detection::HD : Detection::IMDD;
    if (has_quartet) {
        double omega = 0.0, b0 = 0.0, rho = 0.0, phase = 0.0;
        for (const char* k : {"fso.omega", "fso.b0", "fso.rho", "fso.phase_diff"})
            if (!vals.count(k))
                throw ParseError(std::string("constituent form needs ") + k);
        take("fso.omega", &omega);
        take("fso.b0", &b0);
        take("fso.rho", &rho);
        take("fso.phase_diff", &phase);
        double g_guard = 1e-4;
        take("fso.g_d", &g_guard);  // allow overriding the rho=1 guard
        FsoChannelParams fc = FsoChannelParams::from_constituents(
            s.fso.alpha_d, s.fso.beta_d, omega, b0, rho, phase, s.fso.eps,
            s.fso.det, s.fso.u);
        if (fc.g <= 0.0) fc.g = g_guard;
        s.fso = fc;
    } else {
        take("fso.g_d", &s.fso.g);
        take("fso.omega_cap_d", &s.fso.omega_cap);
    }

    take("rs_bits", &s.rs_bits);
    if (vals.count("mc.seed")) {
        s.mc_seed = static_cast<std::uint64_t>(vals["mc.seed"]);
        vals.erase("mc.seed");
    }
    if (vals.count("mc.n_samples")) {
        s.mc_n_samples = static_cast<std::uint64_t>(vals["mc.n_samples"]);
        vals.erase("mc.n_samples");
    }
    take("sweep.from_db", &s.sweep.from_db);
    take("sweep.to_db", &s.sweep.to_db);
    if (vals.count("sweep.points")) {
        s.sweep.points = static_cast<int>(vals["sweep.points"]);
        vals.erase("sweep.points");
    }
    try {
        s.validate();
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid scenario: ") + e.what());
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_scenario(ss.str());
}

namespace {

struct PresetRow {
    const char* name;
    double alpha, mu, g_d, omega_cap, rho;
};

// Classical-model rows; rho = 1 collapses the off-axis scatter power,
// guarded with 1e-4 so the optical constants stay finite.
const PresetRow kPresets[] = {
    {"alpha-mu-malaga", 4.0, 1.0, 2.0, 1.0, 0.0},
    {"eta-mu-malaga", 6.0, 3.0, 2.0, 4.0, 0.0},
    {"nakagami-gg", 2.0, 1.0, 1e-4, 1.0, 1.0},
    {"rayleigh-gg", 2.0, 0.5, 1e-4, 1.0, 1.0},
    {"weibull-lognormal", 4.0, 0.5, 0.0001, 1.3265, 0.0},
};

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& p : kPresets) out.push_back(p.name);
    return out;
}

std::string preset_scenario(const std::string& name) {
    for (const auto& p : kPresets) {
        if (name != p.name) continue;
        std::ostringstream o;
        o << "# " << p.name << " configuration (rho=" << p.rho
          << " folded into g_d / omega_cap_d)\n";
        o << "rf_main.alpha = " << p.alpha << "\n";
        o << "rf_main.eta = 1.0001\n";
        o << "rf_main.mu = " << p.mu << "\n";
        o << "rf_main.omega_db = 10\n";
        o << "rf_eve.alpha = " << p.alpha << "\n";
        o << "rf_eve.eta = 1.0001\n";
        o << "rf_eve.mu = " << p.mu << "\n";
        o << "rf_eve.omega_db = -10\n";
        o << "fso.alpha_d = 8\n";
        o << "fso.beta_d = 4\n";
        o << "fso.g_d = " << p.g_d << "\n";
        o << "fso.omega_cap_d = " << p.omega_cap << "\n";
        o << "fso.epsilon = 6.7\n";
        o << "fso.detection = hd\n";
        o << "fso.u_r_db = 20\n";
        o << "rs_bits = 0.1\n";
        o << "sweep.key = rf_main.omega_db\n";
        o << "sweep.from_db = 0\n";
        o << "sweep.to_db = 40\n";
        o << "sweep.points = 9\n";
        return o.str();
    }
    std::string msg = "unknown preset '" + name + "'; valid names:";
    for (const auto& p : kPresets) msg += std::string(" ") + p.name;
    throw ParseError(msg);
}

namespace {

struct Turb {
    const char* tag;
    double alpha_d;
    int beta_d;
};
const Turb kTurb[] = {{"strong", 2.296, 2}, {"moderate", 4.2, 3}, {"weak", 8.0, 4}};

Scenario base_scenario() {
    Scenario s;
    s.rf_main = {4.0, 1.0001, 1.0, db_to_linear(10.0)};
    s.rf_eve = {4.0, 1.0001, 1.0, db_to_linear(0.0)};
    s.fso = {2.296, 2, 2.0, 2.0, 6.7, Detection::HD, db_to_linear(10.0)};
    s.rs_bits = 0.1;
    s.sweep = {"rf_main.omega_db", 0.0, 30.0, 7};
    return s;
}

std::string rtag(int r) { return r == 1 ? "hd" : "imdd"; }

}  // namespace

std::vector<FigureCurve> figure_curves(int fig_id) {
    if (fig_id < 2 || fig_id > 13)
        throw DomainError("figure id must be in 2..13 (1 is the system diagram)");
    std::vector<FigureCurve> out;
    auto add = [&](std::string name, std::string metric, Scenario s) {
        out.push_back({std::move(name), std::move(metric), std::move(s)});
    };
    switch (fig_id) {
        case 2:   // ASC vs omega_r over turbulence x detection
        case 3:   // ASC vs u_r over turbulence x detection
        case 4: { // SOP vs omega_r over turbulence x detection
            for (const auto& t : kTurb)
                for (int r : {1, 2}) {
                    Scenario s = base_scenario();
                    s.fso.alpha_d = t.alpha_d;
                    s.fso.beta_d = t.beta_d;
                    s.fso.det = r == 1 ? Detection::HD : Detection::IMDD;
                    if (fig_id == 3) {
                        s.sweep.key = "fso.u_r_db";
                        s.rf_main.omega = db_to_linear(10.0);
                    }
                    add(std::string(t.tag) + "_" + rtag(r),
                        fig_id == 4 ? "sop" : "asc", s);
                }
            break;
        }
        case 5:   // ASC vs u_r over pointing x detection
        case 6: { // PNSC vs omega_r over pointing x detection
            for (double eps : {1.0, 6.7})
                for (int r : {1, 2}) {
                    Scenario s = base_scenario();
                    s.fso.eps = eps;
                    s.fso.det = r == 1 ? Detection::HD : Detection::IMDD;
                    if (fig_id == 5) s.sweep.key = "fso.u_r_db";
                    if (fig_id == 6) s.rf_eve.omega = db_to_linear(-5.0);
                    add((eps < 2 ? "eps1_" : "eps6.7_") + rtag(r),
                        fig_id == 5 ? "asc" : "pnsc", s);
                }
            break;
        }
        case 7:   // PNSC vs omega_r over turbulence x detection
        case 8: { // SOP vs omega_r over turbulence x detection, eps = 1
            for (const auto& t : kTurb)
                for (int r : {1, 2}) {
                    Scenario s = base_scenario();
                    s.fso.alpha_d = t.alpha_d;
                    s.fso.beta_d = t.beta_d;
                    s.fso.det = r == 1 ? Detection::HD : Detection::IMDD;
                    if (fig_id == 7) s.rf_eve.omega = db_to_linear(-10.0);
                    if (fig_id == 8) {
                        s.fso.eps = 1.0;
                        s.rf_eve.omega = db_to_linear(5.0);
                    }
                    add(std::string(t.tag) + "_" + rtag(r),
                        fig_id == 7 ? "pnsc" : "sop", s);
                }
            break;
        }
        case 9: {  // ASC vs omega_r over eavesdropper SNR
            for (double wv : {-10.0, -5.0, 0.0, 5.0}) {
                Scenario s = base_scenario();
                s.rf_eve.omega = db_to_linear(wv);
                add("wv" + std::to_string(static_cast<int>(wv)), "asc", s);
            }
            break;
        }
        case 10: {  // SOP vs omega_r over main-link fading shape
            for (double wv : {5.0, -5.0})
                for (auto [a, mu] : {std::pair{2.0, 1.0}, {4.0, 1.0}, {4.0, 2.0}}) {
                    Scenario s = base_scenario();
                    s.fso.eps = 1.0;
                    s.rf_main.alpha = a;
                    s.rf_main.mu = mu;
                    s.rf_eve.omega = db_to_linear(wv);
                    s.sweep.to_db = 40.0;
                    s.sweep.points = 9;
                    add("a" + std::to_string(static_cast<int>(a)) + "mu" +
                            std::to_string(static_cast<int>(mu)) + "_wv" +
                            std::to_string(static_cast<int>(wv)),
                        "sop", s);
                }
            break;
        }
        case 11: {  // PNSC vs omega_r over eavesdropper fading shape
            for (auto [a, mu, wv] : {std::tuple{2.0, 1.0, -5.0},
                                     {4.0, 1.0, -5.0},
                                     {4.0, 2.0, -5.0},
                                     {4.0, 1.0, 0.0}}) {
                Scenario s = base_scenario();
                s.rf_main.alpha = 2.0;
                s.fso.eps = 1.0;
                s.fso.alpha_d = 8.0;
                s.fso.beta_d = 4;
                s.fso.u = db_to_linear(15.0);
                s.rf_eve.alpha = a;
                s.rf_eve.mu = mu;
                s.rf_eve.omega = db_to_linear(wv);
                add("av" + std::to_string(static_cast<int>(a)) + "muv" +
                        std::to_string(static_cast<int>(mu)) + "_wv" +
                        std::to_string(static_cast<int>(wv)),
                    "pnsc", s);
            }
            break;
        }
        case 12: {  // SOP vs omega_r over target rate
            for (double rs : {0.1, 0.5, 1.0, 2.0}) {
                Scenario s = base_scenario();
                s.fso.alpha_d = 8.0;
                s.fso.beta_d = 4;
                s.fso.u = db_to_linear(5.0);
                s.rf_eve.omega = db_to_linear(-5.0);
                s.rs_bits = rs;
                std::ostringstream n;
                n << "rs" << rs;
                add(n.str(), "sop", s);
            }
            break;
        }
        case 13: {  // SOP vs omega_r over the classical-model rows
            for (const auto& p : kPresets) {
                Scenario s = parse_scenario(preset_scenario(p.name));
                s.rf_eve.omega = db_to_linear(-10.0);
                add(p.name, "sop", s);
            }
            break;
        }
        default:
            break;
    }
    return out;
}

}  // namespace rfso
