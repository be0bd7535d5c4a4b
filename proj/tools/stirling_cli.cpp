// stirling_cli.cpp — Command-line front end: spectrum, rates, cycle, sweep, oracles

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stirling/config.hpp"
#include "stirling/report.hpp"
#include "stirling/sweep.hpp"
#include "stirling/thermo.hpp"

namespace fs = std::filesystem;
using namespace stirling;

namespace {

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
    std::cout << "wrote " << path.string() << '\n';
}

void report_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

void print_row(const SweepRow& r, const RunConfig& cfg) {
    const double td = cfg.tau_D();
    std::printf("tau_ab=%.4g tau_cd=%.4g (tau_D units): ", r.tau_ab / td, r.tau_cd / td);
    if (!r.ok) {
        std::printf("FAILED: %s\n", r.error.c_str());
        return;
    }
    const auto& c = r.ledger.columns(cfg.variant);
    std::printf("eta(%s)=%s W=%s P=%s first_law=%s\n", to_string(cfg.variant).c_str(),
                csv_number(c.efficiency).c_str(), csv_number(c.W_extract).c_str(),
                csv_number(cfg.power_norm == PowerNorm::Strokes ? r.ledger.bare.power : r.ledger.bare.power_period).c_str(),
                csv_number(r.ledger.first_law_residual).c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-time two-level Stirling engine with non-Markovian baths"};
    app.require_subcommand(1);
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
    app.add_option("-c,--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
    app.add_option("-s,--set", overrides, "override a config entry, key=value (repeatable)");
    app.add_option("-o,--output-dir", out_dir, "directory for CSV output");

    auto* spectrum = app.add_subcommand("spectrum", "coupling spectra of both baths");
    double rate_tau = 1.0;
    auto* rates = app.add_subcommand("rates", "time-dependent rates along a symmetric cycle");
    rates->add_option("--tau", rate_tau, "tau_ab = tau_cd in units of tau_D")->required()->check(CLI::PositiveNumber);
    auto* cycle = app.add_subcommand("cycle", "single cycle: trajectory and energy ledger");
    std::string mode_name = "symmetric";
    auto* sweep_cmd = app.add_subcommand("sweep", "ledger and distances over stroke durations");
    sweep_cmd->add_option("--mode", mode_name, "symmetric, fix-ab or fix-cd")
        ->check(CLI::IsMember({"symmetric", "fix-ab", "fix-cd"}));
    auto* oracles = app.add_subcommand("oracles", "closed-form limiting cycles");

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config(config_path);
        for (const auto& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw InvalidParameter("--set expects key=value, got '" + kv + "'");
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (rates->parsed()) {
            cfg.tau_ab = rate_tau;
            cfg.tau_cd = rate_tau;
        }
        cfg.validate();
        cfg.cycle_config();
        fs::create_directories(out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const fs::path dir(out_dir);
    try {
        if (spectrum->parsed()) {
            write_file(dir / "spectrum.csv", spectrum_csv(cfg));
            return 0;
        }
        if (oracles->parsed()) {
            write_file(dir / "oracles.csv", oracles_csv(cfg));
            for (const auto& rep : limiting_cycles(cfg.cycle_config()))
                std::printf("eta_%s = %s\n", to_string(rep.which).c_str(), csv_number(rep.columns.efficiency).c_str());
            return 0;
        }
        if (rates->parsed() || cycle->parsed()) {
            const CycleRun run = run_cycle(cfg.cycle_config());
            report_warnings(run.warnings);
            if (rates->parsed()) {
                write_file(dir / "rates.csv", rates_csv(cfg, run));
                return 0;
            }
            const std::vector<SweepRow> rows{summarize_run(0, run)};
            write_file(dir / "trajectory.csv", trajectory_csv(cfg, run));
            write_file(dir / "ledger.csv", ledger_csv(cfg, rows, "cycle"));
            print_row(rows.front(), cfg);
            return 0;
        }
        if (sweep_cmd->parsed()) {
            const SweepMode mode = parse_sweep_mode(mode_name);
            const double td = cfg.tau_D();
            std::vector<double> taus = log_grid(cfg.sweep_min * td, cfg.sweep_max * td, cfg.sweep_points);
            const auto pairs = sweep_durations(mode, taus, cfg.sweep_fixed * td);
            const auto rows = sweep(pairs, cfg.cycle_config(), cfg.threads);
            const std::string tag = "sweep_" + to_string(mode);
            write_file(dir / (tag + "_ledger.csv"), ledger_csv(cfg, rows, "sweep " + to_string(mode)));
            write_file(dir / (tag + "_distances.csv"), distances_csv(cfg, rows, "sweep " + to_string(mode)));
            bool failed = false;
            for (const auto& r : rows) {
                print_row(r, cfg);
                report_warnings(r.warnings);
                failed = failed || !r.ok;
            }
            return failed ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
