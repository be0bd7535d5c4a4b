// propagator.hpp — Unitary propagator on a time grid and Heisenberg-picture coupling operators

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "stirling/drive.hpp"
#include "stirling/qops.hpp"

namespace stirling {

using Vec3 = std::array<double, 3>;

// U(t_k, t_0) on a piecewise-uniform grid, together with the Heisenberg-picture
// coupling operator A(t_k) = U(t_k)^dag sy U(t_k) = a_k . sigma. Unitaries are
// kept in SU(2): U = u0 I - i u.sigma with real (u0, u).
class PropagatorGrid {
public:
    explicit PropagatorGrid(double t_origin = 0.0);

    // Append `intervals` uniform RK4 steps covering proto over [t_start, t_start + duration].
    // t_start must coincide with the current last node. Returns the index of the
    // node at t_start.
    std::size_t extend(const DriveProtocol& proto, double t_start, std::size_t intervals);
    // Same with explicit node times, local to the stroke, increasing and ending at duration.
    std::size_t extend(const DriveProtocol& proto, double t_start, const std::vector<double>& local_nodes);

    std::size_t size() const { return t_.size(); }
    double time(std::size_t k) const { return t_[k]; }
    const PauliOperator& U(std::size_t k) const { return U_[k]; }
    const Vec3& A(std::size_t k) const { return a_[k]; }
    PauliOperator coupling_op(std::size_t k) const { return {0.0, a_[k][0], a_[k][1], a_[k][2]}; }
    // Largest |U^dag U - I| seen before re-projection onto SU(2).
    double max_unitarity_drift() const { return max_drift_; }

private:
    std::vector<double> t_;
    std::vector<PauliOperator> U_;
    std::vector<Vec3> a_;
    double max_drift_{0.0};
};

// Grid for a single stroke with step at most dt, aligned to the stroke end.
PropagatorGrid evolve_unitaries(const DriveProtocol& proto, double dt);

// S~(t_k, tau_j) = U(t_k) A(tau_j) U(t_k)^dag, j <= k.
PauliOperator two_time_op(const PropagatorGrid& grid, std::size_t k, std::size_t j);

// U (v.sigma) U^dag for U in SU(2); returns the rotated complex vector.
std::array<cplx, 3> rotate(const PauliOperator& U, const std::array<cplx, 3>& v);

} // namespace stirling
