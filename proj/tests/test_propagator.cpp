// test_propagator.cpp — Unitary propagation against closed forms and self-convergence

#include "doctest.h"
#include "oracles.hpp"
#include "stirling/propagator.hpp"

using namespace stirling;

namespace {

DriveProtocol hold(double omega, double duration) {
    DriveProtocol p;
    p.direction = DriveDirection::Hold;
    p.hold_high = true;
    p.omega_hi = omega;
    p.omega_lo = 0.49;
    p.duration = duration;
    return p;
}

DriveProtocol compress(double duration) {
    DriveProtocol p;
    p.direction = DriveDirection::Compress;
    p.duration = duration;
    return p;
}

} // namespace

TEST_SUITE("propagator") {

TEST_CASE("constant Hamiltonian matches the matrix exponential") {
    const auto p = hold(0.78, 50.0);
    const PropagatorGrid grid = evolve_unitaries(p, 0.02);
    const double q = std::sqrt(0.25 * 0.78 * 0.78 - 0.01);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); k += 97) {
        oracle::cd ref[4];
        oracle::su2_exp(0.1, 0.0, q, grid.time(k), ref);
        const Mat2 U = grid.U(k).to_matrix();
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(U.a[i] - ref[i]));
    }
    CHECK(worst < 1e-9);
    CHECK(grid.max_unitarity_drift() < 1e-10);
}

TEST_CASE("driven propagation converges at fourth order") {
    const auto p = compress(30.0);
    auto end_U = [&](double dt) { const auto g = evolve_unitaries(p, dt); return g.U(g.size() - 1); };
    const PauliOperator u1 = end_U(0.2), u2 = end_U(0.1), u3 = end_U(0.05), ref = end_U(0.00625);
    const double e1 = (u1 - ref).max_abs(), e2 = (u2 - ref).max_abs(), e3 = (u3 - ref).max_abs();
    const double r1 = e1 / e2, r2 = e2 / e3;
    CHECK(r1 > 12.0);
    CHECK(r1 < 20.0);
    CHECK(r2 > 12.0);
    CHECK(r2 < 20.0);
    const auto g = evolve_unitaries(p, 0.1);
    CHECK(g.max_unitarity_drift() < 1e-10);
    const PauliOperator UdU = g.U(g.size() - 1).adjoint() * g.U(g.size() - 1);
    CHECK((UdU - PauliOperator::identity()).max_abs() < 1e-14);
}

TEST_CASE("Heisenberg coupling operator") {
    const auto g = evolve_unitaries(compress(10.0), 0.05);
    for (std::size_t k : {std::size_t{0}, std::size_t{50}, g.size() - 1}) {
        // the interaction-picture operator at equal times is the bare coupling
        CHECK((two_time_op(g, k, k) - PauliOperator::sigma_y()).max_abs() < 1e-13);
        const Vec3& a = g.A(k);
        CHECK(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK_THROWS_AS(two_time_op(g, 5, 6), InvalidParameter);
}

TEST_CASE("grid extension across strokes") {
    PropagatorGrid g(3.0);
    const auto a = compress(2.0);
    const auto first = g.extend(a, 3.0, std::size_t{10});
    CHECK(first == 0);
    CHECK(g.time(g.size() - 1) == doctest::Approx(5.0));
    const auto b = hold(0.49, 1.0);
    const auto second = g.extend(b, 5.0, std::vector<double>{0.25, 0.5, 0.75, 1.0});
    CHECK(second == 10);
    CHECK(g.size() == 15);
    CHECK_THROWS_AS(g.extend(b, 7.0, std::size_t{4}), InvalidParameter);
    CHECK_THROWS_AS(g.extend(b, 6.0, std::vector<double>{0.2, 0.1, 1.0}), InvalidParameter);
}

}
