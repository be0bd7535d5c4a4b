// report.hpp — CSV tables for spectra, rates, trajectories, ledgers and limiting cycles

#pragma once

#include <string>
#include <vector>

#include "stirling/config.hpp"
#include "stirling/cycle.hpp"
#include "stirling/sweep.hpp"
#include "stirling/thermo.hpp"

namespace stirling {

// 12 significant digits.
std::string csv_number(double x);

// Comment block: command name followed by every resolved config entry.
std::string config_header(const RunConfig& cfg, const std::string& command);

std::string spectrum_csv(const RunConfig& cfg);
// Rates along the recorded cycle; run.config must come from cfg.
std::string rates_csv(const RunConfig& cfg, const CycleRun& run);
std::string trajectory_csv(const RunConfig& cfg, const CycleRun& run);
std::string ledger_csv(const RunConfig& cfg, const std::vector<SweepRow>& rows, const std::string& command);
std::string distances_csv(const RunConfig& cfg, const std::vector<SweepRow>& rows, const std::string& command);
std::string oracles_csv(const RunConfig& cfg);

} // namespace stirling
