// sweep.hpp — Independent cycle runs over a list of stroke durations

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "stirling/cycle.hpp"
#include "stirling/thermo.hpp"

namespace stirling {

enum class SweepMode { Symmetric, FixAB, FixCD };

std::string to_string(SweepMode m);
SweepMode parse_sweep_mode(const std::string& s);

struct SweepRow {
    std::size_t index{};
    double tau_ab{};
    double tau_cd{};
    bool ok{false};
    std::string error;
    EnergyLedger ledger;
    DistanceDiagnostics distances;
    double periodicity_residual{};
    Hygiene hygiene;
    std::vector<std::string> warnings;
};

// Log-spaced durations in [lo, hi] (absolute time units), `points` >= 2.
std::vector<double> log_grid(double lo, double hi, std::size_t points);

// (tau_ab, tau_cd) pairs: symmetric uses tau for both, fix-ab holds tau_ab at
// `fixed` and varies tau_cd, fix-cd the mirror.
std::vector<std::pair<double, double>> sweep_durations(SweepMode mode, const std::vector<double>& taus,
                                                       double fixed);

// Row for an already finished run.
SweepRow summarize_run(std::size_t index, const CycleRun& run);
SweepRow run_point(std::size_t index, double tau_ab, double tau_cd, const CycleConfig& base);

// One run per pair on at most `threads` workers; rows come back in input order
// and a failing run is recorded in its row without stopping the others.
std::vector<SweepRow> sweep(const std::vector<std::pair<double, double>>& durations,
                            const CycleConfig& base, std::size_t threads = 1);

} // namespace stirling
