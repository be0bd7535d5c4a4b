// config.cpp — Run configuration parsing and mapping onto the cycle driver

#include "stirling/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace stirling {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& what) {
    throw InvalidParameter("config key '" + key + "': " + what);
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        bad(key, "expected a number, got '" + v + "'");
    }
    if (used != v.size() || !std::isfinite(x)) bad(key, "expected a finite number, got '" + v + "'");
    return x;
}

std::size_t to_count(const std::string& key, const std::string& v) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        bad(key, "expected a non-negative integer, got '" + v + "'");
    try {
        return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
        bad(key, "integer out of range: '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    bad(key, "expected true or false, got '" + v + "'");
}

void require(bool ok, const std::string& key, const std::string& what) {
    if (!ok) bad(key, what);
}

} // namespace

std::string format_number(double x) {
    char buf[32];
    for (int p = 12; p <= 17; ++p) {
        std::snprintf(buf, sizeof buf, "%.*g", p, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

const std::vector<std::string>& RunConfig::keys() {
    static const std::vector<std::string> k = {
        "beta_h",       "beta_c",       "g_c",          "g_h",         "coupling_set",   "omega_r",
        "omega_1",      "omega_2",      "f",            "delta",       "tau_th",         "tau_ab",
        "tau_cd",       "dt_max",       "min_steps",    "mode",        "variant",        "power_norm",
        "window",       "full_history", "sample_every", "threads",     "sweep_points",   "sweep_min",
        "sweep_max",    "sweep_fixed",  "spectrum_min", "spectrum_max", "spectrum_points"};
    return k;
}

void RunConfig::set(const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    using Setter = std::function<void(RunConfig&, const std::string&)>;
    static const std::map<std::string, Setter> table = [] {
        std::map<std::string, Setter> t;
        for (auto [k, m] : std::initializer_list<std::pair<const char*, double RunConfig::*>>{
                 {"beta_h", &RunConfig::beta_h},       {"beta_c", &RunConfig::beta_c},
                 {"g_c", &RunConfig::g_c},             {"g_h", &RunConfig::g_h},
                 {"omega_r", &RunConfig::omega_r},     {"omega_1", &RunConfig::omega_1},
                 {"omega_2", &RunConfig::omega_2},     {"f", &RunConfig::f},
                 {"delta", &RunConfig::delta},         {"tau_th", &RunConfig::tau_th},
                 {"tau_ab", &RunConfig::tau_ab},       {"tau_cd", &RunConfig::tau_cd},
                 {"dt_max", &RunConfig::dt_max},       {"window", &RunConfig::window},
                 {"sweep_min", &RunConfig::sweep_min}, {"sweep_max", &RunConfig::sweep_max},
                 {"sweep_fixed", &RunConfig::sweep_fixed},
                 {"spectrum_min", &RunConfig::spectrum_min},
                 {"spectrum_max", &RunConfig::spectrum_max}}) {
            const std::string name = k;
            t[k] = [m, name](RunConfig& c, const std::string& v) { c.*m = to_double(name, v); };
        }
        for (auto [k, m] : std::initializer_list<std::pair<const char*, std::size_t RunConfig::*>>{
                 {"min_steps", &RunConfig::min_steps},
                 {"sample_every", &RunConfig::sample_every},
                 {"threads", &RunConfig::threads},
                 {"sweep_points", &RunConfig::sweep_points},
                 {"spectrum_points", &RunConfig::spectrum_points}}) {
            const std::string name = k;
            t[k] = [m, name](RunConfig& c, const std::string& v) { c.*m = to_count(name, v); };
        }
        t["full_history"] = [](RunConfig& c, const std::string& v) { c.full_history = to_bool("full_history", v); };
        t["coupling_set"] = [](RunConfig& c, const std::string& v) {
            if (v == "g1") c.coupling_set = CouplingSet::G1;
            else if (v == "g2") c.coupling_set = CouplingSet::G2;
            else bad("coupling_set", "expected g1 or g2, got '" + v + "'");
        };
        t["mode"] = [](RunConfig& c, const std::string& v) {
            if (v == "full") c.mode = GeneratorMode::Full;
            else if (v == "rotating") c.mode = GeneratorMode::RotatingOnly;
            else bad("mode", "expected full or rotating, got '" + v + "'");
        };
        t["variant"] = [](RunConfig& c, const std::string& v) {
            if (v == "bare") c.variant = HamiltonianVariant::Bare;
            else if (v == "effective") c.variant = HamiltonianVariant::Effective;
            else bad("variant", "expected bare or effective, got '" + v + "'");
        };
        t["power_norm"] = [](RunConfig& c, const std::string& v) {
            if (v == "strokes") c.power_norm = PowerNorm::Strokes;
            else if (v == "period") c.power_norm = PowerNorm::Period;
            else bad("power_norm", "expected strokes or period, got '" + v + "'");
        };
        return t;
    }();
    const auto it = table.find(key);
    if (it == table.end()) throw InvalidParameter("unknown config key '" + key + "'");
    it->second(*this, v);
}

void RunConfig::validate() const {
    require(beta_h > 0.0, "beta_h", "must be > 0");
    require(beta_c > 0.0, "beta_c", "must be > 0");
    require(beta_c > beta_h, "beta_c", "must exceed beta_h (cold bath colder than hot bath)");
    require(g_c > 0.0, "g_c", "must be > 0");
    require(g_h > 0.0, "g_h", "must be > 0");
    require(omega_r > 0.0, "omega_r", "must be > 0");
    require(f > 0.0, "f", "must be > 0");
    require(delta > 0.0, "delta", "must be > 0");
    require(omega_1 > 2.0 * delta, "omega_1", "must exceed 2 * delta");
    require(omega_2 > omega_1, "omega_2", "must exceed omega_1");
    require(tau_th > 0.0, "tau_th", "must be > 0");
    require(tau_ab > 0.0, "tau_ab", "must be > 0");
    require(tau_cd > 0.0, "tau_cd", "must be > 0");
    require(dt_max >= 0.0, "dt_max", "must be >= 0 (0 selects the automatic step)");
    require(min_steps >= 1, "min_steps", "must be >= 1");
    require(window >= 0.0, "window", "must be >= 0 (0 selects the automatic window)");
    require(sample_every >= 1, "sample_every", "must be >= 1");
    require(threads >= 1, "threads", "must be >= 1");
    require(sweep_points >= 2, "sweep_points", "must be >= 2");
    require(sweep_min > 0.0, "sweep_min", "must be > 0");
    require(sweep_max > sweep_min, "sweep_max", "must exceed sweep_min");
    require(sweep_fixed > 0.0, "sweep_fixed", "must be > 0");
    require(spectrum_max > spectrum_min, "spectrum_max", "must exceed spectrum_min");
    require(spectrum_points >= 2, "spectrum_points", "must be >= 2");
}

double RunConfig::coupling_scale() const { return coupling_set == CouplingSet::G2 ? std::sqrt(2.0) : 1.0; }

BathSpec RunConfig::cold_bath() const {
    return {beta_c, g_c * coupling_scale(), omega_r, f, BathLabel::Cold};
}

BathSpec RunConfig::hot_bath() const {
    return {beta_h, g_h * coupling_scale(), omega_r, f, BathLabel::Hot};
}

double RunConfig::tau_D() const { return relaxation_time({beta_h, g_h, omega_r, f, BathLabel::Hot}); }

CycleConfig RunConfig::cycle_config() const {
    validate();
    CycleConfig c;
    const double td = tau_D();
    c.sched = {tau_ab * td, tau_th * td, tau_cd * td, tau_th * td};
    c.cold = cold_bath();
    c.hot = hot_bath();
    c.omega_lo = omega_1;
    c.omega_hi = omega_2;
    c.delta = delta;
    c.dt_max = dt_max;
    c.min_steps = min_steps;
    c.mode = mode;
    c.window = window;
    c.full_history = full_history;
    c.sample_every = sample_every;
    c.validate();
    return c;
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
    auto n = [](double x) { return format_number(x); };
    auto z = [](std::size_t x) { return std::to_string(x); };
    return {
        {"beta_h", n(beta_h)},
        {"beta_c", n(beta_c)},
        {"g_c", n(g_c)},
        {"g_h", n(g_h)},
        {"coupling_set", coupling_set == CouplingSet::G2 ? "g2" : "g1"},
        {"omega_r", n(omega_r)},
        {"omega_1", n(omega_1)},
        {"omega_2", n(omega_2)},
        {"f", n(f)},
        {"delta", n(delta)},
        {"tau_th", n(tau_th)},
        {"tau_ab", n(tau_ab)},
        {"tau_cd", n(tau_cd)},
        {"dt_max", n(dt_max)},
        {"min_steps", z(min_steps)},
        {"mode", mode == GeneratorMode::Full ? "full" : "rotating"},
        {"variant", to_string(variant)},
        {"power_norm", power_norm == PowerNorm::Strokes ? "strokes" : "period"},
        {"window", n(window)},
        {"full_history", full_history ? "true" : "false"},
        {"sample_every", z(sample_every)},
        {"threads", z(threads)},
        {"sweep_points", z(sweep_points)},
        {"sweep_min", n(sweep_min)},
        {"sweep_max", n(sweep_max)},
        {"sweep_fixed", n(sweep_fixed)},
        {"spectrum_min", n(spectrum_min)},
        {"spectrum_max", n(spectrum_max)},
        {"spectrum_points", z(spectrum_points)},
    };
}

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter("config line " + std::to_string(lineno) + ": expected key = value");
        base.set(trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), base);
}

} // namespace stirling
