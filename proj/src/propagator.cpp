// propagator.cpp — RK4 propagation of U(t) with SU(2) re-projection

#include "stirling/propagator.hpp"

#include <cmath>
#include <sstream>

namespace stirling {

namespace {

// -i H U
PauliOperator schrodinger_rhs(const PauliOperator& H, const PauliOperator& U) {
    return -kI * (H * U);
}

double unitarity_defect(const PauliOperator& U) {
    const PauliOperator d = U.adjoint() * U - PauliOperator::identity();
    return d.max_abs();
}

PauliOperator project_su2(const PauliOperator& U) {
    const double u0 = U.c0.real();
    const double ux = -U.cx.imag(), uy = -U.cy.imag(), uz = -U.cz.imag();
    const double n = std::sqrt(u0 * u0 + ux * ux + uy * uy + uz * uz);
    return {u0 / n, -kI * (ux / n), -kI * (uy / n), -kI * (uz / n)};
}

Vec3 heisenberg_coupling(const PauliOperator& U) {
    const PauliOperator A = U.adjoint() * PauliOperator::sigma_y() * U;
    return {A.cx.real(), A.cy.real(), A.cz.real()};
}

} // namespace

PropagatorGrid::PropagatorGrid(double t_origin) {
    t_.push_back(t_origin);
    U_.push_back(PauliOperator::identity());
    a_.push_back(heisenberg_coupling(U_.back()));
}

std::size_t PropagatorGrid::extend(const DriveProtocol& proto, double t_start,
                                   std::size_t intervals) {
    if (intervals == 0) throw InvalidParameter("PropagatorGrid::extend: need at least one step");
    std::vector<double> nodes(intervals);
    const double h = proto.duration / static_cast<double>(intervals);
    for (std::size_t n = 0; n < intervals; ++n) nodes[n] = static_cast<double>(n + 1) * h;
    nodes.back() = proto.duration;
    return extend(proto, t_start, nodes);
}

std::size_t PropagatorGrid::extend(const DriveProtocol& proto, double t_start,
                                   const std::vector<double>& local_nodes) {
    proto.validate();
    if (local_nodes.empty()) throw InvalidParameter("PropagatorGrid::extend: need at least one step");
    if (std::abs(local_nodes.back() - proto.duration) > 1e-9 * proto.duration)
        throw InvalidParameter("PropagatorGrid::extend: nodes must end at the stroke duration");
    if (std::abs(t_start - t_.back()) > 1e-9 * std::max(1.0, std::abs(t_start)))
        throw InvalidParameter("PropagatorGrid::extend: stroke does not start at the last node");

    double prev = 0.0;
    for (double next : local_nodes) {
        if (!(next > prev)) throw InvalidParameter("PropagatorGrid::extend: node times must increase");
        prev = next;
    }

    const std::size_t first = t_.size() - 1;
    t_.reserve(t_.size() + local_nodes.size());
    PauliOperator U = U_.back();
    double tl = 0.0;
    for (double next : local_nodes) {
        const double h = next - tl;
        const PauliOperator H0 = hamiltonian_at(tl, proto).H;
        const PauliOperator Hm = hamiltonian_at(tl + 0.5 * h, proto).H;
        const PauliOperator H1 = hamiltonian_at(next, proto).H;
        const PauliOperator k1 = schrodinger_rhs(H0, U);
        const PauliOperator k2 = schrodinger_rhs(Hm, U + (0.5 * h) * k1);
        const PauliOperator k3 = schrodinger_rhs(Hm, U + (0.5 * h) * k2);
        const PauliOperator k4 = schrodinger_rhs(H1, U + h * k3);
        U += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double drift = unitarity_defect(U);
        max_drift_ = std::max(max_drift_, drift);
        if (drift > 1e-8) {
            std::ostringstream os;
            os << "PropagatorGrid: unitarity drift " << drift << " at t=" << t_start + next
               << "; reduce the step (h=" << h << ")";
            throw NumericalError(os.str());
        }
        U = project_su2(U);
        t_.push_back(t_start + next);
        U_.push_back(U);
        a_.push_back(heisenberg_coupling(U));
        tl = next;
    }
    return first;
}

PropagatorGrid evolve_unitaries(const DriveProtocol& proto, double dt) {
    if (!(dt > 0.0)) throw InvalidParameter("evolve_unitaries: dt must be > 0");
    proto.validate();
    const auto steps = static_cast<std::size_t>(std::ceil(proto.duration / dt - 1e-9));
    PropagatorGrid grid(0.0);
    grid.extend(proto, 0.0, std::max<std::size_t>(steps, 1));
    return grid;
}

std::array<cplx, 3> rotate(const PauliOperator& U, const std::array<cplx, 3>& v) {
    const PauliOperator r = U * PauliOperator{0.0, v[0], v[1], v[2]} * U.adjoint();
    return {r.cx, r.cy, r.cz};
}

PauliOperator two_time_op(const PropagatorGrid& grid, std::size_t k, std::size_t j) {
    if (k >= grid.size()) throw InvalidParameter("two_time_op: t index outside grid");
    if (j > k) throw InvalidParameter("two_time_op: need tau <= t");
    return grid.U(k) * grid.coupling_op(j) * grid.U(k).adjoint();
}

} // namespace stirling
