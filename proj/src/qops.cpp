// qops.cpp — Pauli algebra, eigenframes and entropy functionals

#include "stirling/qops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace stirling {

double Mat2::max_abs() const {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
}

Mat2 operator*(cplx s, const Mat2& x) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.a[k] = s * x.a[k];
    return r;
}

PauliOperator PauliOperator::from_matrix(const Mat2& m) {
    return {0.5 * (m(0, 0) + m(1, 1)),
            0.5 * (m(0, 1) + m(1, 0)),
            0.5 * kI * (m(0, 1) - m(1, 0)),
            0.5 * (m(0, 0) - m(1, 1))};
}

Mat2 PauliOperator::to_matrix() const {
    return Mat2{{c0 + cz, cx - kI * cy, cx + kI * cy, c0 - cz}};
}

bool PauliOperator::is_hermitian(double tol) const {
    return std::abs(c0.imag()) <= tol && std::abs(cx.imag()) <= tol &&
           std::abs(cy.imag()) <= tol && std::abs(cz.imag()) <= tol;
}

double PauliOperator::max_abs() const {
    return std::max({std::abs(c0), std::abs(cx), std::abs(cy), std::abs(cz)});
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
    c0 += o.c0; cx += o.cx; cy += o.cy; cz += o.cz;
    return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& o) {
    c0 -= o.c0; cx -= o.cx; cy -= o.cy; cz -= o.cz;
    return *this;
}

PauliOperator& PauliOperator::operator*=(cplx s) {
    c0 *= s; cx *= s; cy *= s; cz *= s;
    return *this;
}

PauliOperator operator+(PauliOperator x, const PauliOperator& y) { return x += y; }
PauliOperator operator-(PauliOperator x, const PauliOperator& y) { return x -= y; }
PauliOperator operator-(const PauliOperator& x) { return {-x.c0, -x.cx, -x.cy, -x.cz}; }
PauliOperator operator*(cplx s, PauliOperator x) { return x *= s; }
PauliOperator operator*(PauliOperator x, cplx s) { return x *= s; }

PauliOperator operator*(const PauliOperator& x, const PauliOperator& y) {
    // (a0 + a.s)(b0 + b.s) = a0 b0 + a.b + (a0 b + b0 a + i a x b).s
    return {x.c0 * y.c0 + x.cx * y.cx + x.cy * y.cy + x.cz * y.cz,
            x.c0 * y.cx + y.c0 * x.cx + kI * (x.cy * y.cz - x.cz * y.cy),
            x.c0 * y.cy + y.c0 * x.cy + kI * (x.cz * y.cx - x.cx * y.cz),
            x.c0 * y.cz + y.c0 * x.cz + kI * (x.cx * y.cy - x.cy * y.cx)};
}

PauliOperator commutator(const PauliOperator& x, const PauliOperator& y) {
    // Only the cross product survives.
    const cplx two_i = 2.0 * kI;
    return {0.0,
            two_i * (x.cy * y.cz - x.cz * y.cy),
            two_i * (x.cz * y.cx - x.cx * y.cz),
            two_i * (x.cx * y.cy - x.cy * y.cx)};
}

PauliOperator anticommutator(const PauliOperator& x, const PauliOperator& y) {
    return x * y + y * x;
}

cplx trace_product(const PauliOperator& x, const PauliOperator& y) {
    return 2.0 * (x.c0 * y.c0 + x.cx * y.cx + x.cy * y.cy + x.cz * y.cz);
}

DensityMatrix DensityMatrix::from_operator(const PauliOperator& op, double tol) {
    if (std::abs(op.trace() - 1.0) > tol)
        throw NumericalError("density matrix trace deviates from 1: " + to_string(op));
    if (!op.is_hermitian(tol))
        throw NumericalError("density matrix is not Hermitian: " + to_string(op));
    DensityMatrix rho;
    rho.r_ = {2.0 * op.cx.real(), 2.0 * op.cy.real(), 2.0 * op.cz.real()};
    if (rho.min_eigenvalue() < -1e-8)
        throw NumericalError("density matrix is not positive: " + to_string(op));
    return rho;
}

DensityMatrix DensityMatrix::from_bloch(const std::array<double, 3>& r) {
    DensityMatrix rho;
    rho.r_ = r;
    if (rho.min_eigenvalue() < -1e-8)
        throw NumericalError("Bloch vector outside the unit ball");
    return rho;
}

DensityMatrix DensityMatrix::pure(const std::array<cplx, 2>& psi) {
    const double n = std::norm(psi[0]) + std::norm(psi[1]);
    if (std::abs(n - 1.0) > 1e-10) throw InvalidParameter("state vector is not normalized");
    Mat2 m{{psi[0] * std::conj(psi[0]), psi[0] * std::conj(psi[1]),
            psi[1] * std::conj(psi[0]), psi[1] * std::conj(psi[1])}};
    return from_operator(PauliOperator::from_matrix(m));
}

double DensityMatrix::purity_radius() const {
    return std::sqrt(r_[0] * r_[0] + r_[1] * r_[1] + r_[2] * r_[2]);
}

PauliOperator EigenFrame::projector(int n, int m) const {
    const auto& u = n == 0 ? e_vec : g_vec;
    const auto& v = m == 0 ? e_vec : g_vec;
    Mat2 mat{{u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]}};
    return PauliOperator::from_matrix(mat);
}

cplx EigenFrame::element(const PauliOperator& x, int n, int m) const {
    const auto& u = n == 0 ? e_vec : g_vec;
    const auto& v = m == 0 ? e_vec : g_vec;
    const Mat2 xm = x.to_matrix();
    cplx acc = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) acc += u[i] * xm(i, j) * v[j];
    return acc;
}

PauliOperator hamiltonian(double q, double delta) { return {0.0, delta, 0.0, q}; }

EigenFrame eigenframe_at(double q, double delta) {
    if (!(delta > 0.0))
        throw InvalidParameter("eigenframe_at: gap parameter Delta must be > 0");
    EigenFrame f;
    f.theta = 0.5 * std::atan2(delta, q);
    f.omega = 2.0 * std::hypot(q, delta);
    const double c = std::cos(f.theta), s = std::sin(f.theta);
    f.e_vec = {c, s};
    f.g_vec = {s, -c};
    f.L = f.projector(1, 0);
    return f;
}

DensityMatrix gibbs_state(const PauliOperator& H, double beta) {
    if (!H.is_hermitian(1e-12)) throw InvalidParameter("gibbs_state: H is not Hermitian");
    if (!(beta > 0.0)) throw InvalidParameter("gibbs_state: beta must be > 0");
    const double hx = H.cx.real(), hy = H.cy.real(), hz = H.cz.real();
    const double h = std::sqrt(hx * hx + hy * hy + hz * hz);
    if (h == 0.0) return DensityMatrix::maximally_mixed();
    const double t = std::tanh(beta * h);
    return DensityMatrix::from_bloch({-t * hx / h, -t * hy / h, -t * hz / h});
}

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

} // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
    const double r = std::min(rho.purity_radius(), 1.0);
    return -(xlogx(0.5 * (1.0 + r)) + xlogx(0.5 * (1.0 - r)));
}

double relative_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    const auto& r1 = rho1.bloch();
    const auto& r2 = rho2.bloch();
    const double n2 = std::min(rho2.purity_radius(), 1.0);
    const double s1 = von_neumann_entropy(rho1);
    if (n2 == 0.0) return -s1 + std::log(2.0);

    const double proj = (r1[0] * r2[0] + r1[1] * r2[1] + r1[2] * r2[2]) / n2;
    const double w_plus = 0.5 * (1.0 + proj), w_minus = 0.5 * (1.0 - proj);
    const double l_plus = 0.5 * (1.0 + n2), l_minus = 0.5 * (1.0 - n2);

    double cross = 0.0;
    if (w_plus > 1e-14) {
        if (l_plus <= 0.0) return std::numeric_limits<double>::infinity();
        cross += w_plus * std::log(l_plus);
    }
    if (w_minus > 1e-14) {
        if (l_minus <= 0.0) return std::numeric_limits<double>::infinity();
        cross += w_minus * std::log(l_minus);
    }
    return std::max(0.0, -s1 - cross);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    const auto& x = a.bloch();
    const auto& y = b.bloch();
    return 0.5 * std::sqrt((x[0] - y[0]) * (x[0] - y[0]) + (x[1] - y[1]) * (x[1] - y[1]) +
                           (x[2] - y[2]) * (x[2] - y[2]));
}

double polarization(const DensityMatrix& rho, const PauliOperator& H, double omega) {
    if (!(omega > 0.0)) throw InvalidParameter("polarization: omega must be > 0");
    return trace_product(H, rho.op()).real() / omega;
}

double excited_population(const DensityMatrix& rho, const PauliOperator& H) {
    const double hx = H.cx.real(), hy = H.cy.real(), hz = H.cz.real();
    const double h = std::sqrt(hx * hx + hy * hy + hz * hz);
    if (h == 0.0) return 0.5;
    const auto& r = rho.bloch();
    return 0.5 * (1.0 + (r[0] * hx + r[1] * hy + r[2] * hz) / h);
}

std::string to_string(const PauliOperator& op) {
    std::ostringstream os;
    os << "(c0=" << op.c0 << ", cx=" << op.cx << ", cy=" << op.cy << ", cz=" << op.cz << ")";
    return os.str();
}

} // namespace stirling
