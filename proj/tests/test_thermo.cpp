// test_thermo.cpp — Effective Hamiltonian, work and heat integrals, ledgers and limiting cycles

#include "doctest.h"
#include "oracles.hpp"
#include "stirling/thermo.hpp"

using namespace stirling;

namespace {

CycleConfig with_taus(double ab, double cd) {
    CycleConfig c = CycleConfig::defaults();
    const double td = drive_time_unit(c);
    c.sched.tau_ab = ab * td;
    c.sched.tau_cd = cd * td;
    return c;
}

PauliOperator H_at(double omega) { return hamiltonian(std::sqrt(0.25 * omega * omega - 0.01), 0.1); }

} // namespace

TEST_SUITE("thermo") {

TEST_CASE("effective Hamiltonian") {
    const double q = 0.3;
    const PauliOperator H = hamiltonian(q, 0.1);
    CHECK((effective_hamiltonian(H, q, 0.1, {RateSet{}}) - H).max_abs() == 0.0);
    RateSet r;
    r.delta_R = 0.01;
    const PauliOperator He = effective_hamiltonian(H, q, 0.1, {r});
    CHECK((He - 1.01 * H).max_abs() < 1e-15);
    r.delta_CR = 0.02;
    const PauliOperator Hc = effective_hamiltonian(H, q, 0.1, {r});
    CHECK(commutator(Hc, H).max_abs() > 1e-4);
    RateSet other;
    other.delta_R = 0.005;
    CHECK((effective_hamiltonian(H, q, 0.1, {r, other}) - Hc - 0.005 * H).max_abs() < 1e-15);
}

TEST_CASE("ledger arithmetic") {
    const auto c = close_ledger({0.3, -0.1, -0.25, 0.1}, {0.2, 0.0, -0.25, 0.0}, 2.0, 3.0, 10.0);
    CHECK(c.W_extract == doctest::Approx(0.05));
    CHECK(c.Q_h == doctest::Approx(0.4));
    CHECK(c.efficiency == doctest::Approx(0.125));
    CHECK(c.power == doctest::Approx(0.01));
    CHECK(c.power_period == doctest::Approx(0.005));
    CHECK(c.first_law_residual == doctest::Approx(0.0).epsilon(1e-15));
    const auto bad = close_ledger({-0.1, -0.1, -0.1, -0.1}, {0.1, 0.1, 0.1, 0.1}, 1.0, 1.0, 4.0);
    CHECK(std::isnan(bad.efficiency));
}

TEST_CASE("limiting cycles against closed-form two-level thermodynamics") {
    const CycleConfig cfg = CycleConfig::defaults();
    const auto reps = limiting_cycles(cfg);
    const double w1 = 0.49, w2 = 0.78, bh = 2.0, bc = 5.0;
    const double Ua = oracle::energy(w2, bh), Ub = oracle::energy(w1, bh);
    const double Uc = oracle::energy(w1, bc), Ud = oracle::energy(w2, bc);
    const double Sa = oracle::entropy(w2, bh), Sb = oracle::entropy(w1, bh);
    const double Sc = oracle::entropy(w1, bc), Sd = oracle::entropy(w2, bc);
    // energy of a frozen thermal state measured with the other endpoint Hamiltonian
    const double q1 = std::sqrt(0.25 * w1 * w1 - 0.01), q2 = std::sqrt(0.25 * w2 * w2 - 0.01);
    const double overlap = q1 * q2 + 0.01;
    const double Ea_at_1 = Ua * overlap / (0.25 * w2 * w2), Ec_at_2 = Uc * overlap / (0.25 * w1 * w1);
    const double eta_ss = ((Sb - Sa) / bh + (Sd - Sc) / bc + (Uc - Ub) + (Ua - Ud)) / ((Sb - Sa) / bh + (Ua - Ud));
    const double Qh_fs = Ua - Ud;
    const double eta_fs = (Qh_fs + (Uc - Ea_at_1) + (Sd - Sc) / bc) / Qh_fs;
    const double eta_sf = ((Sb - Sa) / bh + (Uc - Ub) + (Ua - Ec_at_2)) / ((Sb - Sa) / bh + (Ua - Ec_at_2));
    const double eta_ff = ((Uc - Ea_at_1) + (Ua - Ec_at_2)) / (Ua - Ec_at_2);
    CHECK(reps[0].which == LimitCase::SS);
    CHECK(reps[0].columns.efficiency == doctest::Approx(eta_ss).epsilon(1e-10));
    CHECK(reps[1].columns.efficiency == doctest::Approx(eta_fs).epsilon(1e-10));
    CHECK(reps[2].columns.efficiency == doctest::Approx(eta_sf).epsilon(1e-10));
    CHECK(reps[3].columns.efficiency == doctest::Approx(eta_ff).epsilon(1e-10));
    CHECK(reps[0].columns.heat_in[0] == doctest::Approx((Sb - Sa) / bh).epsilon(1e-12));
    CHECK(reps[0].columns.heat_in[2] == doctest::Approx((Sd - Sc) / bc).epsilon(1e-12));
    CHECK(reps[3].columns.heat_in[0] == 0.0);
    CHECK(reps[3].columns.heat_in[2] == 0.0);
    CHECK(reps[1].columns.work_on[0] == doctest::Approx(Ea_at_1 - Ua).epsilon(1e-12));
    for (const auto& r : reps) {
        CHECK(r.columns.first_law_residual < 1e-14);
        CHECK(r.columns.efficiency < carnot_efficiency(cfg));
        CHECK(r.columns.efficiency > 0.0);
    }
    CHECK(carnot_efficiency(cfg) == doctest::Approx(0.6));
}

TEST_CASE("default cycle ledger") {
    const CycleRun run = run_cycle(CycleConfig::defaults());
    const EnergyLedger L = ledger(run);
    CHECK(L.first_law_residual < 1e-4);
    CHECK(!L.not_an_engine);
    CHECK(L.bare.work_on[1] == 0.0);
    CHECK(L.bare.work_on[3] == 0.0);
    CHECK(std::abs(L.effective.work_on[1]) > 1e-6);
    CHECK(L.effective.W_extract > L.bare.W_extract);
    CHECK(L.effective.efficiency >= L.bare.efficiency);
    CHECK(L.bare.efficiency < 0.6);
    // Q_h collects the a->b and d->a heats in the engine regime
    CHECK(L.bare.Q_h == doctest::Approx(L.bare.heat_in[0] + L.bare.heat_in[3]));
    // stroke integrals close individually against the internal energy change
    for (const auto& rec : run.strokes) {
        const double dU = trace_product(rec.samples.back().H, rec.samples.back().rho).real() -
                          trace_product(rec.samples.front().H, rec.samples.front().rho).real();
        const double Q = average_heat(rec, HamiltonianVariant::Bare), W = average_work(rec, HamiltonianVariant::Bare);
        CHECK(std::abs(Q + W - dU) < 1e-7);
    }
}

TEST_CASE("diabatic and adiabatic stroke oracles") {
    const CycleRun fast = run_cycle(with_taus(0.01, 0.01));
    const EnergyLedger Lf = ledger(fast);
    const double W_diabatic = trace_product(H_at(0.49) - H_at(0.78), fast.rho_a.op()).real();
    CHECK(Lf.bare.work_on[0] == doctest::Approx(W_diabatic).epsilon(0.02));

    const CycleRun slow = run_cycle(with_taus(20.0, 20.0));
    const EnergyLedger Ls = ledger(slow);
    const double Q_ss = (von_neumann_entropy(slow.rho_b) - von_neumann_entropy(slow.rho_a)) / 2.0;
    CHECK(Ls.bare.heat_in[0] == doctest::Approx(Q_ss).epsilon(0.05));
    CHECK(std::abs(Lf.bare.heat_in[0]) < 0.02 * std::abs(Ls.bare.heat_in[0]));
    CHECK(std::abs(Lf.bare.heat_in[2]) < 0.02 * std::abs(Ls.bare.heat_in[2]));
}

TEST_CASE("heat of fast isothermal strokes vanishes with the duration") {
    // The state entering a->b is the fixed point of the generator there, so the
    // heat flux starts at zero and grows linearly: Q ~ tau^2 over three decades.
    std::vector<double> q;
    for (double tau : {1e-4, 1e-3, 1e-2}) q.push_back(ledger(run_cycle(with_taus(tau, tau))).bare.heat_in[0]);
    CHECK(q[1] / q[0] == doctest::Approx(100.0).epsilon(0.2));
    CHECK(q[2] / q[1] == doctest::Approx(100.0).epsilon(0.2));
}

TEST_CASE("stroke records are validated") {
    StrokeRecord empty;
    CHECK_THROWS_AS(average_work(empty, HamiltonianVariant::Bare), InvalidParameter);
    CHECK_THROWS_AS(average_heat(empty, HamiltonianVariant::Effective), InvalidParameter);
}

}
