// generator.cpp — Memory-kernel rates, energy-basis decomposition and state stepping

#include "stirling/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stirling/drive.hpp"

namespace stirling {

std::string to_string(GeneratorMode m) { return m == GeneratorMode::Full ? "full" : "rotating"; }

double frame_q(const EigenFrame& f) { return 0.5 * f.omega * std::cos(2.0 * f.theta); }
double frame_delta(const EigenFrame& f) { return 0.5 * f.omega * std::sin(2.0 * f.theta); }

PauliOperator kernel_operator(const PropagatorGrid& grid, std::size_t k, std::size_t first,
                              const MemoryKernel& phi, double window) {
    if (k >= grid.size() || first > k) throw InvalidParameter("kernel_operator: bad node indices");
    if (k == first) return {};
    const double tk = grid.time(k);

    std::size_t lo = first, hi = k;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (tk - grid.time(mid) > window) lo = mid + 1;
        else hi = mid;
    }
    const std::size_t j0 = lo;
    if (j0 == k) return {};

    std::array<cplx, 3> acc{};
    auto m_prev = phi.moments(tk - grid.time(j0));
    for (std::size_t j = j0; j < k; ++j) {
        const double s0 = tk - grid.time(j);
        const double s1 = j + 1 == k ? 0.0 : tk - grid.time(j + 1);
        const auto m_next = j + 1 == k ? MemoryKernel::Moments{} : phi.moments(s1);
        const double h = s0 - s1;
        const cplx d0 = m_prev.m0 - m_next.m0;
        const cplx d1 = m_prev.m1 - m_next.m1;
        const cplx e = (s0 * d0 - d1) / h;
        const cplx w0 = d0 - e;
        const Vec3& a0 = grid.A(j);
        const Vec3& a1 = grid.A(j + 1);
        for (int i = 0; i < 3; ++i) acc[i] += w0 * a0[i] + e * a1[i];
        m_prev = m_next;
    }
    const auto r = rotate(grid.U(k), acc);
    return {0.0, r[0], r[1], r[2]};
}

PauliOperator lamb_shift_hamiltonian(const RateSet& rates) {
    const PauliOperator& S = rates.coupling;
    const PauliOperator& K = rates.kernel;
    return (S * K - K.adjoint() * S) * (-0.5 * kI);
}

RateSet rates_from_kernel(const PauliOperator& K, const EigenFrame& frame, double lambda) {
    RateSet r;
    r.kernel = K;
    r.coupling = lambda * PauliOperator::sigma_y();
    cplx eta[2][2], kk[2][2];
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m < 2; ++m) {
            eta[n][m] = frame.element(r.coupling, n, m);
            kk[n][m] = frame.element(K, n, m);
        }
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m < 2; ++m)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    r.R_down[RateSet::index(n, m, a, b)] = eta[a][b] * kk[n][m];
                    r.R_up[RateSet::index(n, m, a, b)] = eta[a][b] * std::conj(kk[m][n]);
                }
    const cplx down = r.down(kG, kE, kE, kG);
    const cplx up = r.up(kG, kE, kE, kG);
    r.gamma_down = 2.0 * down.real();
    r.gamma_up = 2.0 * up.real();
    r.delta_R = (down.imag() + up.imag()) / frame.omega;

    const PauliOperator X = counter_rotating_axis(frame_q(frame), frame_delta(frame));
    const PauliOperator H_ls = lamb_shift_hamiltonian(r);
    r.delta_CR = (trace_product(H_ls, X) / trace_product(X, X)).real();
    return r;
}

RateSet memory_rates(const PropagatorGrid& grid, std::size_t k, std::size_t first,
                     const MemoryKernel& phi, double window, const EigenFrame& frame,
                     double lambda) {
    const PauliOperator K = lambda * kernel_operator(grid, k, first, phi, window);
    return rates_from_kernel(K, frame, lambda);
}

namespace {

PauliOperator dissipator(const PauliOperator& A, const PauliOperator& rho) {
    const PauliOperator Ad = A.adjoint();
    return A * rho * Ad - 0.5 * anticommutator(Ad * A, rho);
}

PauliOperator rotating_generator(const PauliOperator& rho, const GeneratorSample& g) {
    const RateSet& r = g.rates;
    PauliOperator out = -kI * commutator((1.0 + r.delta_R) * g.H, rho);
    out += r.gamma_down * dissipator(g.frame.L, rho);
    out += r.gamma_up * dissipator(g.frame.L.adjoint(), rho);
    return out;
}

} // namespace

PauliOperator apply_generator(const PauliOperator& rho, const GeneratorSample& g, GeneratorMode mode) {
    if (mode == GeneratorMode::RotatingOnly) return rotating_generator(rho, g);
    const PauliOperator& S = g.rates.coupling;
    const PauliOperator& K = g.rates.kernel;
    const PauliOperator Kd = K.adjoint();
    const PauliOperator Krho = K * rho;
    const PauliOperator rhoKd = rho * Kd;
    PauliOperator out = -kI * commutator(g.H, rho);
    out += Krho * S - S * Krho + S * rhoKd - rhoKd * S;
    return out;
}

PauliOperator apply_generator(const DensityMatrix& rho, const GeneratorSample& g, GeneratorMode mode) {
    return apply_generator(rho.op(), g, mode);
}

PauliOperator apply_generator_from_table(const PauliOperator& rho, const GeneratorSample& g) {
    PauliOperator out = -kI * commutator(g.H, rho);
    PauliOperator E[2][2];
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m < 2; ++m) E[n][m] = g.frame.projector(n, m);
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m < 2; ++m)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const cplx rd = g.rates.down(n, m, a, b);
                    const cplx ru = g.rates.up(n, m, a, b);
                    if (rd != 0.0) out += rd * (E[n][m] * rho * E[a][b] - E[a][b] * E[n][m] * rho);
                    if (ru != 0.0) out += ru * (E[a][b] * rho * E[n][m] - rho * E[n][m] * E[a][b]);
                }
    return out;
}

PauliOperator counter_rotating_dissipator(const PauliOperator& rho, const GeneratorSample& g) {
    const PauliOperator X = counter_rotating_axis(frame_q(g.frame), frame_delta(g.frame));
    return apply_generator(rho, g, GeneratorMode::Full) - rotating_generator(rho, g) +
           kI * commutator(g.rates.delta_CR * X, rho);
}

DensityMatrix rotating_invariant_state(const RateSet& rates, const EigenFrame& frame) {
    const double total = rates.gamma_up + rates.gamma_down;
    if (total == 0.0 || !std::isfinite(total))
        throw InvalidParameter("rotating_invariant_state: gamma_up + gamma_down = 0");
    const PauliOperator op = (rates.gamma_up / total) * frame.projector(kE, kE) +
                             (rates.gamma_down / total) * frame.projector(kG, kG);
    return DensityMatrix::from_operator(op);
}

namespace {

std::array<double, 3> bloch_rate(const PauliOperator& d) {
    return {2.0 * d.cx.real(), 2.0 * d.cy.real(), 2.0 * d.cz.real()};
}

std::array<double, 3> affine(const BlochMap& bm, const std::array<double, 3>& r) {
    std::array<double, 3> out = bm.b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += bm.M[i][j] * r[j];
    return out;
}

double det3(const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

BlochMap bloch_map(const GeneratorSample& g, GeneratorMode mode) {
    BlochMap bm;
    const PauliOperator mixed = DensityMatrix::maximally_mixed().op();
    bm.b = bloch_rate(apply_generator(mixed, g, mode));
    for (int j = 0; j < 3; ++j) {
        PauliOperator unit{0.0, 0.0, 0.0, 0.0};
        (j == 0 ? unit.cx : j == 1 ? unit.cy : unit.cz) = 0.5;
        // Generator is affine in r; subtract the constant part.
        const auto col = bloch_rate(apply_generator(mixed + unit, g, mode));
        for (int i = 0; i < 3; ++i) bm.M[i][j] = col[i] - bm.b[i];
    }
    return bm;
}

DensityMatrix asymptotic_state(const GeneratorSample& g, GeneratorMode mode,
                               const DensityMatrix& rho_init, double tol) {
    const BlochMap bm = bloch_map(g, mode);
    double norm = 0.0;
    for (const auto& row : bm.M)
        norm = std::max(norm, std::abs(row[0]) + std::abs(row[1]) + std::abs(row[2]));
    if (norm == 0.0) throw NumericalError("asymptotic_state: generator vanishes");
    const double h = 0.5 / norm;
    const double relax = g.rates.gamma_up + g.rates.gamma_down;
    const double t_limit = relax > 0.0 ? 1e4 / relax : 1e8;
    const auto max_steps = static_cast<std::size_t>(std::min(t_limit / h, 2e7));

    auto r = rho_init.bloch();
    auto add = [](const std::array<double, 3>& x, double s, const std::array<double, 3>& y) {
        return std::array<double, 3>{x[0] + s * y[0], x[1] + s * y[1], x[2] + s * y[2]};
    };
    double resid = 0.0;
    for (std::size_t n = 0; n <= max_steps; ++n) {
        const auto k1 = affine(bm, r);
        resid = 0.5 * std::max({std::abs(k1[0]), std::abs(k1[1]), std::abs(k1[2])});
        if (resid < tol) return DensityMatrix::from_bloch(r);
        const auto k2 = affine(bm, add(r, 0.5 * h, k1));
        const auto k3 = affine(bm, add(r, 0.5 * h, k2));
        const auto k4 = affine(bm, add(r, h, k3));
        for (int i = 0; i < 3; ++i) r[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        if (!std::isfinite(r[0] + r[1] + r[2])) break;
    }
    std::ostringstream os;
    os << "asymptotic_state: no convergence, residual |d rho/dt| = " << resid;
    throw NumericalError(os.str());
}

DensityMatrix stationary_state(const GeneratorSample& g, GeneratorMode mode) {
    const BlochMap bm = bloch_map(g, mode);
    const auto& M = bm.M;
    const double a2 = -(M[0][0] + M[1][1] + M[2][2]);
    const double a1 = (M[0][0] * M[1][1] - M[0][1] * M[1][0]) +
                      (M[0][0] * M[2][2] - M[0][2] * M[2][0]) +
                      (M[1][1] * M[2][2] - M[1][2] * M[2][1]);
    const double a0 = -det3(M);
    if (!(a2 > 0.0 && a0 > 0.0 && a2 * a1 > a0))
        throw NumericalError("stationary_state: frozen generator is not contracting");
    std::array<double, 3> r{};
    const double d = det3(M);
    for (int c = 0; c < 3; ++c) {
        auto Mc = M;
        for (int i = 0; i < 3; ++i) Mc[i][c] = -bm.b[i];
        r[c] = det3(Mc) / d;
    }
    return DensityMatrix::from_bloch(r);
}

StepResult step_state(const DensityMatrix& rho, double dt, const GeneratorSample& g0,
                      const GeneratorSample& g_mid, const GeneratorSample& g1, GeneratorMode mode) {
    const PauliOperator p = rho.op();
    const PauliOperator k1 = apply_generator(p, g0, mode);
    const PauliOperator k2 = apply_generator(p + (0.5 * dt) * k1, g_mid, mode);
    const PauliOperator k3 = apply_generator(p + (0.5 * dt) * k2, g_mid, mode);
    const PauliOperator k4 = apply_generator(p + dt * k3, g1, mode);
    StepResult out;
    out.raw = p + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.trace_defect = std::abs(out.raw.trace() - 1.0);
    out.hermiticity_defect = std::max({std::abs(out.raw.c0.imag()), std::abs(out.raw.cx.imag()),
                                       std::abs(out.raw.cy.imag()), std::abs(out.raw.cz.imag())});
    const double c0 = out.raw.c0.real();
    const std::array<double, 3> r{out.raw.cx.real() / c0, out.raw.cy.real() / c0,
                                  out.raw.cz.real() / c0};
    DensityMatrix next = DensityMatrix::maximally_mixed();
    try {
        next = DensityMatrix::from_bloch(r);
    } catch (const NumericalError&) {
        std::ostringstream os;
        os << "step_state: positivity lost, state " << to_string(out.raw) << ", |r|="
           << std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        throw NumericalError(os.str());
    }
    out.rho = next;
    return out;
}

double kernel_window(const BathSpec& spec, double requested, std::vector<std::string>* warnings) {
    const TimeScales ts = time_scales(spec);
    double window = requested > 0.0 ? requested : std::max(10.0 * ts.tau_C, 5.0 * ts.tau_B);
    for (int iter = 0; iter < 20; ++iter) {
        const auto phi = correlation_function(spec, 0.01, 2.0 * window);
        double ref = 0.0, tail = 0.0;
        for (std::size_t k = 0; k < phi.values.size(); ++k) {
            const double t = static_cast<double>(k) * phi.dt;
            const double a = std::abs(phi.values[k]);
            if (t >= 0.25 * ts.tau_B && t <= ts.tau_B) ref = std::max(ref, a);
            if (t >= window) tail = std::max(tail, a);
        }
        if (tail <= 1e-3 * ref) return window;
        const double extended = 1.5 * window;
        if (warnings) {
            std::ostringstream os;
            os << to_string(spec.label) << " bath: memory window " << window
               << " truncates |Phi| at " << tail / ref << " of its peak; extended to " << extended;
            warnings->push_back(os.str());
        }
        window = extended;
    }
    throw NumericalError("kernel_window: correlation function does not decay");
}

} // namespace stirling
