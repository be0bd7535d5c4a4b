// qops.hpp — Operator algebra and state functionals for a two-level working substance
//
// Energies and frequencies are in units of the reference scale omega_0 = 1,
// times in units of 1/omega_0, hbar = k_B = 1.

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace stirling {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

// Raised for parameter values outside an operation's domain.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a numerical procedure fails a tolerance it is required to meet.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<cplx, 4> a{};

    cplx& operator()(int r, int c) { return a[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return a[2 * r + c]; }

    static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
    Mat2 adjoint() const { return Mat2{{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}}; }
    cplx trace() const { return a[0] + a[3]; }
    double max_abs() const;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(cplx s, const Mat2& x);

// 2x2 operator as c0*I + cx*sx + cy*sy + cz*sz with complex coefficients.
struct PauliOperator {
    cplx c0{}, cx{}, cy{}, cz{};

    static PauliOperator identity() { return {1.0, 0.0, 0.0, 0.0}; }
    static PauliOperator sigma_x() { return {0.0, 1.0, 0.0, 0.0}; }
    static PauliOperator sigma_y() { return {0.0, 0.0, 1.0, 0.0}; }
    static PauliOperator sigma_z() { return {0.0, 0.0, 0.0, 1.0}; }

    static PauliOperator from_matrix(const Mat2& m);
    Mat2 to_matrix() const;

    PauliOperator adjoint() const { return {std::conj(c0), std::conj(cx), std::conj(cy), std::conj(cz)}; }
    cplx trace() const { return 2.0 * c0; }
    bool is_hermitian(double tol = 1e-12) const;
    double max_abs() const;

    PauliOperator& operator+=(const PauliOperator& o);
    PauliOperator& operator-=(const PauliOperator& o);
    PauliOperator& operator*=(cplx s);
};

PauliOperator operator+(PauliOperator x, const PauliOperator& y);
PauliOperator operator-(PauliOperator x, const PauliOperator& y);
PauliOperator operator-(const PauliOperator& x);
PauliOperator operator*(cplx s, PauliOperator x);
PauliOperator operator*(PauliOperator x, cplx s);
// Operator product via the Pauli algebra.
PauliOperator operator*(const PauliOperator& x, const PauliOperator& y);

PauliOperator commutator(const PauliOperator& x, const PauliOperator& y);
PauliOperator anticommutator(const PauliOperator& x, const PauliOperator& y);
// tr[x y]
cplx trace_product(const PauliOperator& x, const PauliOperator& y);

// Unit-trace Hermitian positive-semidefinite state. Stored as Bloch vector r,
// rho = (I + r.sigma)/2.
class DensityMatrix {
public:
    DensityMatrix() = default; // maximally mixed

    // Validates trace, Hermiticity and positivity against the given tolerance.
    static DensityMatrix from_operator(const PauliOperator& op, double tol = 1e-10);
    static DensityMatrix from_bloch(const std::array<double, 3>& r);
    static DensityMatrix maximally_mixed() { return {}; }
    // |psi><psi| for a normalized vector.
    static DensityMatrix pure(const std::array<cplx, 2>& psi);

    PauliOperator op() const { return {0.5, 0.5 * r_[0], 0.5 * r_[1], 0.5 * r_[2]}; }
    const std::array<double, 3>& bloch() const { return r_; }
    double purity_radius() const;
    double min_eigenvalue() const { return 0.5 * (1.0 - purity_radius()); }

private:
    std::array<double, 3> r_{0.0, 0.0, 0.0};
};

// Instantaneous eigenbasis of H_S = q sz + Delta sx.
struct EigenFrame {
    double theta{};            // mixing angle, (1/2) arccot(q/Delta)
    double omega{};            // level splitting 2 sqrt(q^2 + Delta^2)
    std::array<double, 2> e_vec{}; // cos(theta)|e> + sin(theta)|g>
    std::array<double, 2> g_vec{}; // sin(theta)|e> - cos(theta)|g>
    PauliOperator L;           // |eps_g><eps_e|

    // |eps_n><eps_m| with n, m in {0 = e, 1 = g}.
    PauliOperator projector(int n, int m) const;
    // <eps_n| X |eps_m>
    cplx element(const PauliOperator& x, int n, int m) const;
};

PauliOperator hamiltonian(double q, double delta);
EigenFrame eigenframe_at(double q, double delta);

// exp(-beta H)/Z for Hermitian H.
DensityMatrix gibbs_state(const PauliOperator& H, double beta);

double von_neumann_entropy(const DensityMatrix& rho);
// tr[rho1 ln rho1] - tr[rho1 ln rho2]; +infinity when rho1 has support outside supp(rho2).
double relative_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// n = tr[H rho] / omega, in [-1/2, 1/2].
double polarization(const DensityMatrix& rho, const PauliOperator& H, double omega);

// Population of the upper level of H in state rho.
double excited_population(const DensityMatrix& rho, const PauliOperator& H);

std::string to_string(const PauliOperator& op);

} // namespace stirling
