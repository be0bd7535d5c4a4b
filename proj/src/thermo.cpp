// thermo.cpp — Work and heat bookkeeping, energy ledgers and closed-form limiting cycles

#include "stirling/thermo.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "stirling/drive.hpp"

namespace stirling {

PauliOperator effective_hamiltonian(const PauliOperator& H, double q, double delta,
                                    std::initializer_list<RateSet> rates) {
    const PauliOperator X = counter_rotating_axis(q, delta);
    PauliOperator out = H;
    for (const RateSet& r : rates) out += r.delta_R * H + r.delta_CR * X;
    return out;
}

namespace {

double simpson(const std::vector<double>& f, std::size_t first, std::size_t intervals, double h) {
    if (intervals < 2 || intervals % 2 != 0 || first + intervals >= f.size())
        throw InvalidParameter("simpson: segment does not fit the samples");
    double acc = f[first] + f[first + intervals];
    for (std::size_t k = 1; k < intervals; ++k) acc += (k % 2 == 1 ? 4.0 : 2.0) * f[first + k];
    return acc * h / 3.0;
}

void check_record(const StrokeRecord& rec) {
    if (rec.segments.empty() || rec.samples.size() < 3)
        throw InvalidParameter("stroke record has no samples");
    const auto& last = rec.segments.back();
    for (const auto& seg : rec.segments)
        if (seg.steps < 2) throw InvalidParameter("stroke record segment shorter than two steps");
    if (last.first + 2 * last.steps + 1 != rec.samples.size())
        throw InvalidParameter("stroke record segments misaligned with samples");
}

} // namespace

double average_work(const StrokeRecord& rec, HamiltonianVariant variant) {
    check_record(rec);
    const auto& s = rec.samples;
    std::vector<double> f(s.size());
    double total = 0.0;
    if (variant == HamiltonianVariant::Bare) {
        for (std::size_t k = 0; k < s.size(); ++k) f[k] = trace_product(s[k].dH_dt, s[k].rho).real();
        for (const auto& seg : rec.segments) total += simpson(f, seg.first, 2 * seg.steps, 0.5 * seg.dt);
        return total;
    }
    for (const auto& seg : rec.segments) {
        const double h = 0.5 * seg.dt;
        const std::size_t a = seg.first, b = seg.first + 2 * seg.steps;
        const auto& H = [&](std::size_t k) -> const PauliOperator& { return s[k].H_eff; };
        for (std::size_t k = a; k <= b; ++k) {
            PauliOperator d;
            if (k == a) d = -25.0 * H(k) + 48.0 * H(k + 1) - 36.0 * H(k + 2) + 16.0 * H(k + 3) - 3.0 * H(k + 4);
            else if (k == a + 1) d = -3.0 * H(k - 1) - 10.0 * H(k) + 18.0 * H(k + 1) - 6.0 * H(k + 2) + H(k + 3);
            else if (k == b) d = 25.0 * H(k) - 48.0 * H(k - 1) + 36.0 * H(k - 2) - 16.0 * H(k - 3) + 3.0 * H(k - 4);
            else if (k == b - 1) d = 3.0 * H(k + 1) + 10.0 * H(k) - 18.0 * H(k - 1) + 6.0 * H(k - 2) - H(k - 3);
            else d = H(k - 2) - 8.0 * H(k - 1) + 8.0 * H(k + 1) - H(k + 2);
            f[k] = trace_product(d, s[k].rho).real() / (12.0 * h);
        }
        total += simpson(f, a, 2 * seg.steps, h);
    }
    const double jump = trace_product(s.front().H_eff - rec.H_eff_before, s.front().rho).real();
    return total + jump;
}

double average_heat(const StrokeRecord& rec, HamiltonianVariant variant) {
    check_record(rec);
    const auto& s = rec.samples;
    std::vector<double> f(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const PauliOperator& H = variant == HamiltonianVariant::Bare ? s[k].H : s[k].H_eff;
        f[k] = trace_product(H, s[k].drho_dt).real();
    }
    double total = 0.0;
    for (const auto& seg : rec.segments) total += simpson(f, seg.first, 2 * seg.steps, 0.5 * seg.dt);
    return total;
}

LedgerColumns close_ledger(const std::array<double, 4>& heat_in, const std::array<double, 4>& work_on,
                           double tau_ab, double tau_cd, double period) {
    LedgerColumns c;
    c.heat_in = heat_in;
    c.work_on = work_on;
    double sum_w = 0.0, sum_q = 0.0, abs_q = 0.0;
    for (int i = 0; i < 4; ++i) {
        sum_w += work_on[i];
        sum_q += heat_in[i];
        abs_q += std::abs(heat_in[i]);
        c.Q_h += std::max(heat_in[i], 0.0);
    }
    c.W_extract = -sum_w;
    c.power = c.W_extract / (tau_ab + tau_cd);
    c.power_period = c.W_extract / period;
    c.efficiency = c.Q_h > 0.0 ? c.W_extract / c.Q_h : std::numeric_limits<double>::quiet_NaN();
    const double scale = std::abs(c.W_extract) + abs_q;
    c.first_law_residual = scale > 0.0 ? std::abs(sum_w + sum_q) / scale : 0.0;
    return c;
}

EnergyLedger ledger(const CycleRun& run) {
    EnergyLedger L;
    const auto& sch = run.config.sched;
    L.tau_ab = sch.tau_ab;
    L.tau_cd = sch.tau_cd;
    for (auto v : {HamiltonianVariant::Bare, HamiltonianVariant::Effective}) {
        std::array<double, 4> q{}, w{};
        for (std::size_t i = 0; i < 4; ++i) {
            q[i] = average_heat(run.strokes[i], v);
            w[i] = average_work(run.strokes[i], v);
        }
        (v == HamiltonianVariant::Bare ? L.bare : L.effective) =
            close_ledger(q, w, sch.tau_ab, sch.tau_cd, sch.period());
    }
    L.first_law_residual = std::max(L.bare.first_law_residual, L.effective.first_law_residual);
    L.not_an_engine = !(L.bare.Q_h > 0.0) || !(L.effective.Q_h > 0.0);
    return L;
}

double carnot_efficiency(const CycleConfig& cfg) { return 1.0 - cfg.hot.beta / cfg.cold.beta; }

std::string to_string(LimitCase c) {
    switch (c) {
    case LimitCase::SS: return "ss";
    case LimitCase::FS: return "fs";
    case LimitCase::SF: return "sf";
    case LimitCase::FF: return "ff";
    }
    return "?";
}

std::array<LimitingCycleReport, 4> limiting_cycles(const CycleConfig& cfg) {
    cfg.validate();
    auto H_at = [&](double omega) {
        return hamiltonian(std::sqrt(0.25 * omega * omega - cfg.delta * cfg.delta), cfg.delta);
    };
    const PauliOperator H1 = H_at(cfg.omega_lo), H2 = H_at(cfg.omega_hi);
    const double bh = cfg.hot.beta, bc = cfg.cold.beta;
    const DensityMatrix ra = gibbs_state(H2, bh), rb = gibbs_state(H1, bh);
    const DensityMatrix rc = gibbs_state(H1, bc), rd = gibbs_state(H2, bc);
    auto energy = [](const PauliOperator& H, const DensityMatrix& r) {
        return trace_product(H, r.op()).real();
    };
    const double Ua = energy(H2, ra), Ub = energy(H1, rb), Uc = energy(H1, rc), Ud = energy(H2, rd);
    const double Sa = von_neumann_entropy(ra), Sb = von_neumann_entropy(rb);
    const double Sc = von_neumann_entropy(rc), Sd = von_neumann_entropy(rd);

    std::array<LimitingCycleReport, 4> out;
    const auto& sch = cfg.sched;
    int idx = 0;
    for (LimitCase which : {LimitCase::SS, LimitCase::FS, LimitCase::SF, LimitCase::FF}) {
        const bool fast_ab = which == LimitCase::FS || which == LimitCase::FF;
        const bool fast_cd = which == LimitCase::SF || which == LimitCase::FF;
        std::array<double, 4> q{}, w{};
        // a -> b at the hot bath
        if (fast_ab) {
            q[0] = 0.0;
            w[0] = energy(H1, ra) - energy(H2, ra);
            q[1] = Uc - energy(H1, ra);
        } else {
            q[0] = (Sb - Sa) / bh;
            w[0] = Ub - Ua - q[0];
            q[1] = Uc - Ub;
        }
        // c -> d at the cold bath
        if (fast_cd) {
            q[2] = 0.0;
            w[2] = energy(H2, rc) - energy(H1, rc);
            q[3] = Ua - energy(H2, rc);
        } else {
            q[2] = (Sd - Sc) / bc;
            w[2] = Ud - Uc - q[2];
            q[3] = Ua - Ud;
        }
        out[idx++] = {which, close_ledger(q, w, sch.tau_ab, sch.tau_cd, sch.period())};
    }
    return out;
}

} // namespace stirling
