// config.hpp — Flat key=value run configuration with validation

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stirling/cycle.hpp"
#include "stirling/sweep.hpp"

namespace stirling {

enum class CouplingSet { G1, G2 };
enum class PowerNorm { Strokes, Period };

struct RunConfig {
    double beta_h{2.0};
    double beta_c{5.0};
    double g_c{0.2};   // reference (g1) amplitudes
    double g_h{0.17};
    CouplingSet coupling_set{CouplingSet::G1};
    double omega_r{0.6};
    double omega_1{0.49};
    double omega_2{0.78};
    double f{2.0};
    double delta{0.1};
    double tau_th{6.0};   // durations in units of tau_D = 1 / G_hot(omega_r) at g1
    double tau_ab{1.0};
    double tau_cd{1.0};
    double dt_max{0.0};
    std::size_t min_steps{200};
    GeneratorMode mode{GeneratorMode::Full};
    HamiltonianVariant variant{HamiltonianVariant::Bare};
    PowerNorm power_norm{PowerNorm::Strokes};
    double window{0.0};
    bool full_history{false};
    std::size_t sample_every{1};
    std::size_t threads{1};
    std::size_t sweep_points{25};
    double sweep_min{0.05};
    double sweep_max{20.0};
    double sweep_fixed{1.0};
    double spectrum_min{-3.0};
    double spectrum_max{3.0};
    std::size_t spectrum_points{601};

    // Sets one key from its text value; unknown keys and malformed values throw
    // InvalidParameter naming the key.
    void set(const std::string& key, const std::string& value);
    // Cross-key constraints.
    void validate() const;

    double coupling_scale() const;
    BathSpec cold_bath() const;
    BathSpec hot_bath() const;
    double tau_D() const;
    CycleConfig cycle_config() const;

    // Resolved configuration, one "key = value" per line in a fixed order.
    std::vector<std::pair<std::string, std::string>> entries() const;
    static const std::vector<std::string>& keys();
};

// Parses key=value lines; '#' starts a comment, blank lines are skipped.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

// Shortest text that round-trips to the same double.
std::string format_number(double x);

} // namespace stirling
