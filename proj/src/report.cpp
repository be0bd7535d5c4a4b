// report.cpp — CSV emission

#include "stirling/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace stirling {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Csv {
public:
    Csv(const RunConfig& cfg, const std::string& command) { out_ << config_header(cfg, command); }
    Csv& columns(std::initializer_list<const char*> names) {
        bool first = true;
        for (const char* n : names) {
            out_ << (first ? "" : ",") << n;
            first = false;
        }
        out_ << '\n';
        return *this;
    }
    Csv& cell(double x) { return raw(csv_number(x)); }
    Csv& cell(const std::string& s) { return raw(s); }
    Csv& cell(std::size_t n) { return raw(std::to_string(n)); }
    Csv& end() {
        out_ << '\n';
        fresh_ = true;
        return *this;
    }
    std::string str() const { return out_.str(); }

private:
    Csv& raw(const std::string& s) {
        out_ << (fresh_ ? "" : ",") << s;
        fresh_ = false;
        return *this;
    }
    std::ostringstream out_;
    bool fresh_{true};
};

std::string quoted(std::string s) {
    for (char& c : s)
        if (c == '"' || c == '\n' || c == ',') c = ' ';
    return '"' + s + '"';
}

void ledger_cells(Csv& csv, const LedgerColumns& c, PowerNorm norm) {
    for (double q : c.heat_in) csv.cell(q);
    for (double w : c.work_on) csv.cell(w);
    csv.cell(c.W_extract).cell(c.Q_h).cell(norm == PowerNorm::Strokes ? c.power : c.power_period).cell(c.efficiency);
}

} // namespace

std::string csv_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string config_header(const RunConfig& cfg, const std::string& command) {
    std::ostringstream os;
    os << "# stirling " << command << '\n';
    for (const auto& [k, v] : cfg.entries()) os << "# " << k << " = " << v << '\n';
    os << "# tau_D = " << csv_number(cfg.tau_D()) << '\n';
    return os.str();
}

std::string spectrum_csv(const RunConfig& cfg) {
    cfg.validate();
    Csv csv(cfg, "spectrum");
    csv.columns({"omega", "G_cold", "G_hot"});
    const BathSpec cold = cfg.cold_bath(), hot = cfg.hot_bath();
    const std::size_t n = cfg.spectrum_points;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = cfg.spectrum_min +
                         (cfg.spectrum_max - cfg.spectrum_min) * static_cast<double>(i) / static_cast<double>(n - 1);
        csv.cell(w).cell(coupling_spectrum(w, cold)).cell(coupling_spectrum(w, hot)).end();
    }
    return csv.str();
}

std::string rates_csv(const RunConfig& cfg, const CycleRun& run) {
    Csv csv(cfg, "rates");
    csv.columns({"t", "stroke", "bath", "omega", "gamma_down", "gamma_up", "delta_R", "delta_CR",
                 "gamma_down_markov", "gamma_up_markov"});
    const double T = run.config.sched.period();
    for (const auto& p : run.trajectory) {
        const BathLabel bath = StrokeSchedule::active_bath(p.stroke);
        const BathSpec& spec = bath == BathLabel::Hot ? run.config.hot : run.config.cold;
        csv.cell(p.t - T).cell(to_string(p.stroke)).cell(to_string(bath)).cell(p.omega)
            .cell(p.rates.gamma_down).cell(p.rates.gamma_up).cell(p.rates.delta_R).cell(p.rates.delta_CR)
            .cell(kTwoPi * coupling_spectrum(p.omega, spec)).cell(kTwoPi * coupling_spectrum(-p.omega, spec))
            .end();
    }
    return csv.str();
}

std::string trajectory_csv(const RunConfig& cfg, const CycleRun& run) {
    Csv csv(cfg, "cycle");
    csv.columns({"t", "stroke", "omega", "n", "p_excited", "p_ground", "bloch_x", "bloch_y", "bloch_z"});
    const double T = run.config.sched.period();
    for (const auto& p : run.trajectory) {
        const double pe = excited_population(p.rho, hamiltonian(p.q, run.config.delta));
        const auto b = p.rho.bloch();
        csv.cell(p.t - T).cell(to_string(p.stroke)).cell(p.omega).cell(p.polarization)
            .cell(pe).cell(1.0 - pe).cell(b[0]).cell(b[1]).cell(b[2]).end();
    }
    return csv.str();
}

std::string ledger_csv(const RunConfig& cfg, const std::vector<SweepRow>& rows, const std::string& command) {
    Csv csv(cfg, command);
    csv.columns({"index", "tau_ab", "tau_cd", "tau_ab_D", "tau_cd_D",
                 "Q_ab_bare", "Q_bc_bare", "Q_cd_bare", "Q_da_bare", "W_ab_bare", "W_bc_bare", "W_cd_bare",
                 "W_da_bare", "W_extract_bare", "Q_h_bare", "P_bare", "eta_bare",
                 "Q_ab_eff", "Q_bc_eff", "Q_cd_eff", "Q_da_eff", "W_ab_eff", "W_bc_eff", "W_cd_eff",
                 "W_da_eff", "W_extract_eff", "Q_h_eff", "P_eff", "eta_eff",
                 "first_law_residual", "not_an_engine", "status", "error"});
    const double td = cfg.tau_D();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& r : rows) {
        csv.cell(r.index).cell(r.tau_ab).cell(r.tau_cd).cell(r.tau_ab / td).cell(r.tau_cd / td);
        if (r.ok) {
            ledger_cells(csv, r.ledger.bare, cfg.power_norm);
            ledger_cells(csv, r.ledger.effective, cfg.power_norm);
            csv.cell(r.ledger.first_law_residual).cell(std::string(r.ledger.not_an_engine ? "1" : "0"));
            csv.cell(std::string("ok")).cell(std::string("")).end();
        } else {
            for (int i = 0; i < 25; ++i) csv.cell(nan);
            csv.cell(std::string("")).cell(std::string("failed")).cell(quoted(r.error)).end();
        }
    }
    return csv.str();
}

std::string distances_csv(const RunConfig& cfg, const std::vector<SweepRow>& rows, const std::string& command) {
    Csv csv(cfg, command);
    csv.columns({"index", "tau_ab", "tau_cd", "tau_ab_D", "tau_cd_D", "S_b_bstar", "S_d_dstar", "S_b_c", "S_d_a",
                 "periodicity_residual", "max_trace_defect", "max_hermiticity_defect", "min_eigenvalue",
                 "warnings", "status"});
    const double td = cfg.tau_D();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& r : rows) {
        csv.cell(r.index).cell(r.tau_ab).cell(r.tau_cd).cell(r.tau_ab / td).cell(r.tau_cd / td);
        if (r.ok) {
            const auto& d = r.distances;
            csv.cell(d.b_to_b_star).cell(d.d_to_d_star).cell(d.b_to_c).cell(d.d_to_a);
            csv.cell(r.periodicity_residual).cell(r.hygiene.max_trace_defect)
                .cell(r.hygiene.max_hermiticity_defect).cell(r.hygiene.min_eigenvalue);
            csv.cell(r.warnings.size()).cell(std::string("ok")).end();
        } else {
            for (int i = 0; i < 8; ++i) csv.cell(nan);
            csv.cell(std::size_t{0}).cell(std::string("failed")).end();
        }
    }
    return csv.str();
}

std::string oracles_csv(const RunConfig& cfg) {
    const CycleConfig cc = cfg.cycle_config();
    Csv csv(cfg, "oracles");
    csv.columns({"case", "Q_ab", "Q_bc", "Q_cd", "Q_da", "W_ab", "W_bc", "W_cd", "W_da", "W_extract", "Q_h",
                 "eta", "eta_carnot"});
    for (const auto& rep : limiting_cycles(cc)) {
        const auto& c = rep.columns;
        csv.cell(to_string(rep.which));
        for (double q : c.heat_in) csv.cell(q);
        for (double w : c.work_on) csv.cell(w);
        csv.cell(c.W_extract).cell(c.Q_h).cell(c.efficiency).cell(carnot_efficiency(cc)).end();
    }
    return csv.str();
}

} // namespace stirling
