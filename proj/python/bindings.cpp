// bindings.cpp — Python module over the stirling core

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stirling/bath.hpp"
#include "stirling/config.hpp"
#include "stirling/cycle.hpp"
#include "stirling/report.hpp"
#include "stirling/sweep.hpp"
#include "stirling/thermo.hpp"

namespace py = pybind11;
using namespace stirling;

namespace {

BathLabel parse_label(const std::string& s) {
    if (s == "hot") return BathLabel::Hot;
    if (s == "cold") return BathLabel::Cold;
    throw InvalidParameter("bath label must be 'hot' or 'cold'");
}

RunConfig make_config(const py::kwargs& kw) {
    RunConfig cfg;
    for (const auto& [k, v] : kw) {
        std::string text;
        if (py::isinstance<py::bool_>(v)) text = v.cast<bool>() ? "true" : "false";
        else if (py::isinstance<py::float_>(v)) text = format_number(v.cast<double>());
        else text = py::str(v).cast<std::string>();
        cfg.set(k.cast<std::string>(), text);
    }
    cfg.validate();
    return cfg;
}

py::dict trajectory_dict(const CycleRun& run) {
    std::vector<double> t, omega, n;
    std::vector<std::string> stroke;
    std::vector<double> gd, gu, dr, dcr;
    const double T = run.config.sched.period();
    for (const auto& p : run.trajectory) {
        t.push_back(p.t - T);
        stroke.push_back(to_string(p.stroke));
        omega.push_back(p.omega);
        n.push_back(p.polarization);
        gd.push_back(p.rates.gamma_down);
        gu.push_back(p.rates.gamma_up);
        dr.push_back(p.rates.delta_R);
        dcr.push_back(p.rates.delta_CR);
    }
    py::dict d;
    d["t"] = t;
    d["stroke"] = stroke;
    d["omega"] = omega;
    d["n"] = n;
    d["gamma_down"] = gd;
    d["gamma_up"] = gu;
    d["delta_R"] = dr;
    d["delta_CR"] = dcr;
    return d;
}

} // namespace

PYBIND11_MODULE(_stirling, m) {
    m.doc() = "Finite-time two-level Stirling engine with non-Markovian baths";

    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<BathSpec>(m, "BathSpec")
        .def(py::init([](double beta, double g, double omega_res, double f, const std::string& label) {
                 BathSpec s{beta, g, omega_res, f, parse_label(label)};
                 s.validate();
                 return s;
             }),
             py::arg("beta"), py::arg("g"), py::arg("omega_res") = 0.6, py::arg("f") = 2.0, py::arg("label") = "hot")
        .def_readonly("beta", &BathSpec::beta)
        .def_readonly("g", &BathSpec::g)
        .def_readonly("omega_res", &BathSpec::omega_res)
        .def_readonly("f", &BathSpec::f)
        .def_property_readonly("label", [](const BathSpec& s) { return to_string(s.label); });

    m.def("coupling_spectrum", [](double w, const BathSpec& s) { return coupling_spectrum(w, s); },
          py::arg("omega"), py::arg("spec"));
    m.def("coupling_spectrum", [](const std::vector<double>& w, const BathSpec& s) {
        std::vector<double> out;
        out.reserve(w.size());
        for (double x : w) out.push_back(coupling_spectrum(x, s));
        return out;
    }, py::arg("omega"), py::arg("spec"));
    m.def("time_scales", [](const BathSpec& s) {
        const TimeScales ts = time_scales(s);
        py::dict d;
        d["tau_R"] = ts.tau_R;
        d["tau_B"] = ts.tau_B;
        d["tau_C"] = ts.tau_C;
        return d;
    });

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init(&make_config))
        .def("set", &RunConfig::set)
        .def("entries", &RunConfig::entries)
        .def("tau_D", &RunConfig::tau_D)
        .def("cold_bath", &RunConfig::cold_bath)
        .def("hot_bath", &RunConfig::hot_bath)
        .def_static("keys", &RunConfig::keys);
    m.def("parse_config", [](const std::string& text) { return parse_config(text); });

    py::class_<LedgerColumns>(m, "LedgerColumns")
        .def_readonly("heat_in", &LedgerColumns::heat_in)
        .def_readonly("work_on", &LedgerColumns::work_on)
        .def_readonly("W_extract", &LedgerColumns::W_extract)
        .def_readonly("Q_h", &LedgerColumns::Q_h)
        .def_readonly("power", &LedgerColumns::power)
        .def_readonly("power_period", &LedgerColumns::power_period)
        .def_readonly("efficiency", &LedgerColumns::efficiency)
        .def_readonly("first_law_residual", &LedgerColumns::first_law_residual);

    py::class_<EnergyLedger>(m, "EnergyLedger")
        .def_readonly("tau_ab", &EnergyLedger::tau_ab)
        .def_readonly("tau_cd", &EnergyLedger::tau_cd)
        .def_readonly("bare", &EnergyLedger::bare)
        .def_readonly("effective", &EnergyLedger::effective)
        .def_readonly("first_law_residual", &EnergyLedger::first_law_residual)
        .def_readonly("not_an_engine", &EnergyLedger::not_an_engine);

    py::class_<DistanceDiagnostics>(m, "DistanceDiagnostics")
        .def_readonly("b_to_b_star", &DistanceDiagnostics::b_to_b_star)
        .def_readonly("d_to_d_star", &DistanceDiagnostics::d_to_d_star)
        .def_readonly("b_to_c", &DistanceDiagnostics::b_to_c)
        .def_readonly("d_to_a", &DistanceDiagnostics::d_to_a);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("index", &SweepRow::index)
        .def_readonly("tau_ab", &SweepRow::tau_ab)
        .def_readonly("tau_cd", &SweepRow::tau_cd)
        .def_readonly("ok", &SweepRow::ok)
        .def_readonly("error", &SweepRow::error)
        .def_readonly("ledger", &SweepRow::ledger)
        .def_readonly("distances", &SweepRow::distances)
        .def_readonly("periodicity_residual", &SweepRow::periodicity_residual)
        .def_readonly("warnings", &SweepRow::warnings);

    m.def(
        "run_cycle",
        [](const RunConfig& cfg) {
            CycleRun run;
            {
                py::gil_scoped_release release;
                run = run_cycle(cfg.cycle_config());
            }
            py::dict d;
            d["row"] = summarize_run(0, run);
            d["trajectory"] = trajectory_dict(run);
            d["rho_a"] = run.rho_a.bloch();
            d["rho_b"] = run.rho_b.bloch();
            d["rho_c"] = run.rho_c.bloch();
            d["rho_d"] = run.rho_d.bloch();
            return d;
        },
        py::arg("config"));

    m.def(
        "sweep",
        [](const RunConfig& cfg, const std::vector<std::pair<double, double>>& taus_in_tau_D) {
            const double td = cfg.tau_D();
            std::vector<std::pair<double, double>> pairs;
            for (auto [a, c] : taus_in_tau_D) pairs.emplace_back(a * td, c * td);
            py::gil_scoped_release release;
            return sweep(pairs, cfg.cycle_config(), cfg.threads);
        },
        py::arg("config"), py::arg("durations"));

    m.def("limiting_cycles", [](const RunConfig& cfg) {
        py::dict d;
        for (const auto& rep : limiting_cycles(cfg.cycle_config())) d[py::str(to_string(rep.which))] = rep.columns;
        return d;
    });

    m.def("spectrum_csv", &spectrum_csv);
    m.def("oracles_csv", &oracles_csv);
}
