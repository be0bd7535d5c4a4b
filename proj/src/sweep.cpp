// sweep.cpp — Bounded worker pool over cycle runs

#include "stirling/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace stirling {

std::string to_string(SweepMode m) {
    switch (m) {
    case SweepMode::Symmetric: return "symmetric";
    case SweepMode::FixAB: return "fix-ab";
    case SweepMode::FixCD: return "fix-cd";
    }
    return "?";
}

SweepMode parse_sweep_mode(const std::string& s) {
    if (s == "symmetric") return SweepMode::Symmetric;
    if (s == "fix-ab") return SweepMode::FixAB;
    if (s == "fix-cd") return SweepMode::FixCD;
    throw InvalidParameter("sweep mode must be symmetric, fix-ab or fix-cd (got '" + s + "')");
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0) || !(hi > lo)) throw InvalidParameter("log_grid: need 0 < lo < hi");
    if (points < 2) throw InvalidParameter("log_grid: need at least 2 points");
    std::vector<double> out(points);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < points; ++i)
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<std::pair<double, double>> sweep_durations(SweepMode mode, const std::vector<double>& taus,
                                                       double fixed) {
    std::vector<std::pair<double, double>> out;
    out.reserve(taus.size());
    for (double t : taus) {
        switch (mode) {
        case SweepMode::Symmetric: out.emplace_back(t, t); break;
        case SweepMode::FixAB: out.emplace_back(fixed, t); break;
        case SweepMode::FixCD: out.emplace_back(t, fixed); break;
        }
    }
    return out;
}

SweepRow summarize_run(std::size_t index, const CycleRun& run) {
    SweepRow row;
    row.index = index;
    row.tau_ab = run.config.sched.tau_ab;
    row.tau_cd = run.config.sched.tau_cd;
    row.ledger = ledger(run);
    row.distances = distance_diagnostics(run);
    row.periodicity_residual = run.periodicity_residual;
    row.hygiene = run.hygiene;
    row.warnings = run.warnings;
    row.ok = true;
    return row;
}

SweepRow run_point(std::size_t index, double tau_ab, double tau_cd, const CycleConfig& base) {
    SweepRow row;
    row.index = index;
    row.tau_ab = tau_ab;
    row.tau_cd = tau_cd;
    try {
        CycleConfig cfg = base;
        cfg.sched.tau_ab = tau_ab;
        cfg.sched.tau_cd = tau_cd;
        row = summarize_run(index, run_cycle(cfg));
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::vector<SweepRow> sweep(const std::vector<std::pair<double, double>>& durations,
                            const CycleConfig& base, std::size_t threads) {
    if (durations.empty()) throw InvalidParameter("sweep: empty duration list");
    base.validate();
    std::vector<SweepRow> rows(durations.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < durations.size(); i = next++)
            rows[i] = run_point(i, durations[i].first, durations[i].second, base);
    };
    const std::size_t n = std::clamp<std::size_t>(threads, 1, durations.size());
    if (n == 1) {
        worker();
        return rows;
    }
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    pool.clear();
    return rows;
}

} // namespace stirling
