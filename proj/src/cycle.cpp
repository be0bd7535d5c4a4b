// cycle.cpp — Four-stroke cycle driver

#include "stirling/cycle.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include "stirling/propagator.hpp"
#include "stirling/thermo.hpp"

namespace stirling {

std::string to_string(HamiltonianVariant v) { return v == HamiltonianVariant::Bare ? "bare" : "effective"; }

void CycleConfig::validate() const {
    sched.validate();
    cold.validate();
    hot.validate();
    if (cold.label != BathLabel::Cold || hot.label != BathLabel::Hot)
        throw InvalidParameter("cycle: bath labels must be cold/hot");
    DriveProtocol probe;
    probe.omega_lo = omega_lo;
    probe.omega_hi = omega_hi;
    probe.delta = delta;
    probe.validate();
    if (!(omega_lo < omega_hi)) throw InvalidParameter("cycle: need omega_lo < omega_hi");
    if (dt_max < 0.0 || !std::isfinite(dt_max)) throw InvalidParameter("cycle: dt_max must be >= 0");
    if (min_steps < 1) throw InvalidParameter("cycle: min_steps must be >= 1");
    if (window < 0.0) throw InvalidParameter("cycle: window must be >= 0");
    if (sample_every < 1) throw InvalidParameter("cycle: sample_every must be >= 1");
}

double CycleConfig::resolved_dt_max() const {
    return dt_max > 0.0 ? dt_max : 0.02 * 2.0 * std::numbers::pi / omega_hi;
}

std::size_t CycleConfig::steps_for(double duration) const {
    const auto n = static_cast<std::size_t>(std::ceil(duration / resolved_dt_max() - 1e-9));
    return std::max(n, min_steps);
}

std::vector<double> CycleConfig::stroke_steps(double duration, bool graded) const {
    const std::size_t M = steps_for(duration);
    const double uniform = duration / static_cast<double>(M);
    std::vector<double> steps;
    double used = 0.0;
    if (graded) {
        for (double h = 2e-3; h < 0.75 * uniform; h *= 2.0) {
            if (used + 4.0 * h > 0.25 * duration) break;
            for (int i = 0; i < 4; ++i) steps.push_back(h);
            used += 4.0 * h;
        }
    }
    const double rest = duration - used;
    const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(rest / uniform - 1e-9)));
    for (std::size_t i = 0; i < n; ++i) steps.push_back(rest / static_cast<double>(n));
    return steps;
}

double relaxation_time(const BathSpec& spec) { return 1.0 / coupling_spectrum(spec.omega_res, spec); }

double drive_time_unit(const CycleConfig& cfg) { return relaxation_time(cfg.hot); }

CycleConfig CycleConfig::defaults() {
    CycleConfig c;
    const double td = relaxation_time(c.hot);
    c.sched = {td, 6.0 * td, td, 6.0 * td};
    return c;
}

namespace {

using KernelKey = std::tuple<double, double, double, double, double>;

std::shared_ptr<const MemoryKernel> shared_kernel(const BathSpec& spec, double s_max) {
    static std::mutex mu;
    static std::map<KernelKey, std::shared_ptr<const MemoryKernel>> cache;
    const KernelKey key{spec.beta, spec.g, spec.omega_res, spec.f, s_max};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto k = std::make_shared<const MemoryKernel>(spec, s_max);
    std::lock_guard lock(mu);
    if (cache.size() > 16) cache.clear();
    return cache.emplace(key, std::move(k)).first->second;
}

struct WindowResult {
    double window;
    std::vector<std::string> warnings;
};

WindowResult shared_window(const BathSpec& spec, double requested) {
    static std::mutex mu;
    static std::map<KernelKey, WindowResult> cache;
    const KernelKey key{spec.beta, spec.g, spec.omega_res, spec.f, requested};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    WindowResult r;
    r.window = kernel_window(spec, requested, &r.warnings);
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(r)).first->second;
}

struct Slot {
    int cycle;
    Stroke stroke;
    double t_start;
};

struct NodeEval {
    GeneratorSample gen;
    DriveSample drive;
    PauliOperator H_eff;
};

PauliOperator hermite_midpoint(const PauliOperator& p0, const PauliOperator& d0,
                               const PauliOperator& p1, const PauliOperator& d1, double dt) {
    return 0.5 * (p0 + p1) + (dt / 8.0) * (d0 - d1);
}

} // namespace

CycleRun run_cycle(const CycleConfig& cfg) {
    cfg.validate();
    CycleRun run;
    run.config = cfg;
    const auto& sch = cfg.sched;
    const double T = sch.period();

    // Bath-coupled intervals: memory accumulates across strokes sharing a bath.
    std::vector<std::vector<Slot>> intervals;
    for (int c = 0; c < 2; ++c)
        for (Stroke s : kStrokes) {
            const Slot slot{c, s, c * T + sch.offset(s)};
            const bool same_bath = !intervals.empty() &&
                                   StrokeSchedule::active_bath(intervals.back().back().stroke) ==
                                       StrokeSchedule::active_bath(s);
            if (same_bath) intervals.back().push_back(slot);
            else intervals.push_back({slot});
        }

    std::shared_ptr<const MemoryKernel> kernel_hot, kernel_cold;
    if (cfg.full_history) {
        run.window_hot = sch.tau_da + sch.tau_ab;
        run.window_cold = sch.tau_bc + sch.tau_cd;
        kernel_hot = shared_kernel(cfg.hot, run.window_hot + 1.0);
        kernel_cold = shared_kernel(cfg.cold, run.window_cold + 1.0);
    } else {
        for (auto* p : {&cfg.hot, &cfg.cold}) {
            auto w = shared_window(*p, cfg.window);
            (p == &cfg.hot ? run.window_hot : run.window_cold) = w.window;
            run.warnings.insert(run.warnings.end(), w.warnings.begin(), w.warnings.end());
        }
        kernel_hot = shared_kernel(cfg.hot, run.window_hot + 1.0);
        kernel_cold = shared_kernel(cfg.cold, run.window_cold + 1.0);
    }

    const PauliOperator H_a = hamiltonian_at(0.0, stroke_protocol(Stroke::AB, sch, cfg.omega_lo, cfg.omega_hi, cfg.delta)).H;
    DensityMatrix rho = gibbs_state(H_a, cfg.hot.beta);
    PauliOperator last_H_eff = H_a;
    Hygiene& hyg = run.hygiene;
    hyg.min_eigenvalue = rho.min_eigenvalue();

    for (const auto& interval : intervals) {
        const BathLabel bath = StrokeSchedule::active_bath(interval.front().stroke);
        const MemoryKernel& mk = bath == BathLabel::Hot ? *kernel_hot : *kernel_cold;
        const double window = cfg.full_history ? std::numeric_limits<double>::infinity()
                                               : (bath == BathLabel::Hot ? run.window_hot : run.window_cold);

        PropagatorGrid grid(interval.front().t_start);
        std::vector<std::size_t> starts;
        std::vector<std::vector<double>> plans;
        for (std::size_t i = 0; i < interval.size(); ++i) {
            const Slot& slot = interval[i];
            const auto proto = stroke_protocol(slot.stroke, sch, cfg.omega_lo, cfg.omega_hi, cfg.delta);
            plans.push_back(cfg.stroke_steps(proto.duration, i == 0));
            std::vector<double> nodes;
            double tl = 0.0;
            for (double d : plans.back()) {
                nodes.push_back(tl + 0.5 * d);
                tl += d;
                nodes.push_back(tl);
            }
            nodes.back() = proto.duration;
            try {
                starts.push_back(grid.extend(proto, slot.t_start, nodes));
            } catch (const NumericalError& err) {
                std::ostringstream os;
                os << "cycle " << slot.cycle + 1 << ", stroke " << to_string(slot.stroke)
                   << " (t_start=" << slot.t_start << "): " << err.what();
                throw NumericalError(os.str());
            }
        }

        for (std::size_t i = 0; i < interval.size(); ++i) {
            const Slot& slot = interval[i];
            const auto proto = stroke_protocol(slot.stroke, sch, cfg.omega_lo, cfg.omega_hi, cfg.delta);
            const std::vector<double>& plan = plans[i];
            const std::size_t M = plan.size();
            std::vector<double> node_t{0.0};
            for (double d : plan) {
                node_t.push_back(node_t.back() + 0.5 * d);
                node_t.push_back(node_t.back() + 0.5 * d);
            }
            node_t.back() = proto.duration;
            const std::size_t k0 = starts[i];
            const bool record = slot.cycle == 1;

            auto eval = [&](std::size_t n) {
                NodeEval e;
                e.drive = hamiltonian_at(node_t[n], proto);
                e.gen.frame = eigenframe_at(e.drive.q, cfg.delta);
                e.gen.rates = memory_rates(grid, k0 + n, 0, mk, window, e.gen.frame);
                e.gen.H = e.drive.H;
                e.H_eff = effective_hamiltonian(e.drive.H, e.drive.q, cfg.delta, {e.gen.rates});
                return e;
            };
            auto point = [&](double t, const NodeEval& e, const DensityMatrix& r) {
                run.trajectory.push_back({t, slot.stroke, e.drive.omega, e.drive.q, r,
                                          polarization(r, e.drive.H, e.drive.omega), e.gen.rates});
            };

            StrokeRecord rec;
            rec.stroke = slot.stroke;
            rec.bath = bath;
            rec.t_start = slot.t_start;
            rec.duration = proto.duration;
            rec.H_eff_before = last_H_eff;

            try {
                NodeEval e0 = eval(0);
                PauliOperator drho0 = apply_generator(rho, e0.gen, cfg.mode);
                if (record) {
                    if (slot.stroke == Stroke::AB) run.rho_a = rho;
                    rec.samples.reserve(2 * M + 1);
                    rec.samples.push_back({slot.t_start, rho.op(), e0.drive.H, e0.drive.dH_dt, e0.H_eff, drho0});
                    point(slot.t_start, e0, rho);
                }
                for (std::size_t m = 0; m < M; ++m) {
                    NodeEval em = eval(2 * m + 1);
                    NodeEval e1 = eval(2 * m + 2);
                    const double dt = plan[m];
                    const StepResult res = step_state(rho, dt, e0.gen, em.gen, e1.gen, cfg.mode);
                    hyg.max_trace_defect = std::max(hyg.max_trace_defect, res.trace_defect);
                    hyg.max_hermiticity_defect = std::max(hyg.max_hermiticity_defect, res.hermiticity_defect);
                    hyg.min_eigenvalue = std::min(hyg.min_eigenvalue, res.rho.min_eigenvalue());
                    const PauliOperator drho1 = apply_generator(res.rho, e1.gen, cfg.mode);
                    const double t1 = slot.t_start + node_t[2 * m + 2];
                    if (record) {
                        const PauliOperator rho_mid = hermite_midpoint(rho.op(), drho0, res.rho.op(), drho1, dt);
                        const PauliOperator drho_mid = apply_generator(rho_mid, em.gen, cfg.mode);
                        rec.samples.push_back({slot.t_start + node_t[2 * m + 1], rho_mid,
                                               em.drive.H, em.drive.dH_dt, em.H_eff, drho_mid});
                        rec.samples.push_back({t1, res.rho.op(), e1.drive.H, e1.drive.dH_dt, e1.H_eff, drho1});
                        if (rec.segments.empty() || std::abs(rec.segments.back().dt - dt) > 1e-12 * dt)
                            rec.segments.push_back({2 * m, 0, dt});
                        ++rec.segments.back().steps;
                        if ((m + 1) % cfg.sample_every == 0 || m + 1 == M) point(t1, e1, res.rho);
                    }
                    rho = res.rho;
                    drho0 = drho1;
                    e0 = std::move(e1);
                }
                last_H_eff = e0.H_eff;
                if (record) {
                    switch (slot.stroke) {
                    case Stroke::AB:
                        run.rho_b = rho;
                        run.rho_b_star = asymptotic_state(e0.gen, cfg.mode, rho);
                        break;
                    case Stroke::BC: run.rho_c = rho; break;
                    case Stroke::CD:
                        run.rho_d = rho;
                        run.rho_d_star = asymptotic_state(e0.gen, cfg.mode, rho);
                        break;
                    case Stroke::DA: run.rho_end = rho; break;
                    }
                    run.strokes[static_cast<std::size_t>(slot.stroke)] = std::move(rec);
                }
            } catch (const NumericalError& err) {
                std::ostringstream os;
                os << "cycle " << slot.cycle + 1 << ", stroke " << to_string(slot.stroke)
                   << " (t_start=" << slot.t_start << "): " << err.what();
                throw NumericalError(os.str());
            }
        }
    }

    run.periodicity_residual = trace_distance(run.rho_end, run.rho_a);
    const auto proto_bc = stroke_protocol(Stroke::BC, sch, cfg.omega_lo, cfg.omega_hi, cfg.delta);
    const double off_c = trace_distance(run.rho_c, gibbs_state(hamiltonian_at(0.0, proto_bc).H, cfg.cold.beta));
    if (off_c > 1e-2) {
        std::ostringstream os;
        os << "state at c is " << off_c << " (trace distance) from the cold Gibbs state; isochoric strokes too short";
        run.warnings.push_back(os.str());
    }
    return run;
}

DistanceDiagnostics distance_diagnostics(const CycleRun& run) {
    return {relative_entropy(run.rho_b, run.rho_b_star), relative_entropy(run.rho_d, run.rho_d_star),
            relative_entropy(run.rho_b, run.rho_c), relative_entropy(run.rho_d, run.rho_a)};
}

} // namespace stirling
