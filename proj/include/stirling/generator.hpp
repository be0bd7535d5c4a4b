// generator.hpp — Memory-kernel rates, energy-basis decomposition and state stepping

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "stirling/bath.hpp"
#include "stirling/propagator.hpp"
#include "stirling/qops.hpp"

namespace stirling {

enum class GeneratorMode { Full, RotatingOnly };

std::string to_string(GeneratorMode m);

// Instantaneous generator coefficients. With S = lambda sy = sum eta_rs E_rs and
// K = \int dtau Phi(t - tau) S~(t, tau) = sum K_nm E_nm in the energy basis,
//   R_down[nm,rs] = eta_rs K_nm,   R_up[nm,rs] = eta_rs conj(K_mn),
// so that d rho/dt = -i[H, rho] + sum R_down (E_nm rho E_rs - E_rs E_nm rho)
//                                  + R_up (E_rs rho E_nm - rho E_nm E_rs).
struct RateSet {
    double gamma_down{};
    double gamma_up{};
    double delta_R{};  // rotating Lamb shift, multiplies H
    double delta_CR{}; // counter-rotating Lamb shift, multiplies Delta sz - q sx
    std::array<cplx, 16> R_down{};
    std::array<cplx, 16> R_up{};
    PauliOperator kernel;   // K(t)
    PauliOperator coupling; // S(t)

    static constexpr std::size_t index(int n, int m, int r, int s) {
        return static_cast<std::size_t>(8 * n + 4 * m + 2 * r + s);
    }
    cplx down(int n, int m, int r, int s) const { return R_down[index(n, m, r, s)]; }
    cplx up(int n, int m, int r, int s) const { return R_up[index(n, m, r, s)]; }
};

inline constexpr int kE = 0;
inline constexpr int kG = 1;

// Recovers (q, Delta) from the frame.
double frame_q(const EigenFrame& f);
double frame_delta(const EigenFrame& f);

// K(t_k) by product integration over nodes j in [first, k] with t_k - tau_j <= window:
// piecewise-linear A(tau) against the exact cumulative moments of Phi.
PauliOperator kernel_operator(const PropagatorGrid& grid, std::size_t k, std::size_t first,
                              const MemoryKernel& phi, double window);

RateSet rates_from_kernel(const PauliOperator& K, const EigenFrame& frame, double lambda = 1.0);

RateSet memory_rates(const PropagatorGrid& grid, std::size_t k, std::size_t first,
                     const MemoryKernel& phi, double window, const EigenFrame& frame,
                     double lambda = 1.0);

// Lamb-shift Hamiltonian (S K - K^dag S)/(2i) implied by the kernel.
PauliOperator lamb_shift_hamiltonian(const RateSet& rates);

// Everything the generator needs at one instant.
struct GeneratorSample {
    RateSet rates;
    EigenFrame frame;
    PauliOperator H;
};

// d rho/dt. Full: -i[H, rho] + K rho S - S K rho + S rho K^dag - rho K^dag S.
// RotatingOnly: -i[(1 + delta_R) H, rho] + gamma_down D[L] + gamma_up D[L^dag].
PauliOperator apply_generator(const PauliOperator& rho, const GeneratorSample& g, GeneratorMode mode);
PauliOperator apply_generator(const DensityMatrix& rho, const GeneratorSample& g, GeneratorMode mode);

// Same as Full, assembled term by term from the R tables.
PauliOperator apply_generator_from_table(const PauliOperator& rho, const GeneratorSample& g);

// Counter-rotating dissipator: Full minus the rotating part minus -i[delta_CR X, rho].
PauliOperator counter_rotating_dissipator(const PauliOperator& rho, const GeneratorSample& g);

// (gamma_up |e><e| + gamma_down |g><g|) / (gamma_up + gamma_down)
DensityMatrix rotating_invariant_state(const RateSet& rates, const EigenFrame& frame);

// Affine Bloch-vector form of a frozen generator: dr/dt = M r + b.
struct BlochMap {
    std::array<std::array<double, 3>, 3> M{};
    std::array<double, 3> b{};
};

BlochMap bloch_map(const GeneratorSample& g, GeneratorMode mode);

// Fixed point of the frozen generator by time evolution until |d rho/dt| < tol.
DensityMatrix asymptotic_state(const GeneratorSample& g, GeneratorMode mode,
                               const DensityMatrix& rho_init, double tol = 1e-10);

// Fixed point by solving M r = -b; throws if M is not Hurwitz-stable.
DensityMatrix stationary_state(const GeneratorSample& g, GeneratorMode mode);

struct StepResult {
    DensityMatrix rho;
    PauliOperator raw;      // state before re-projection
    double trace_defect{};  // |tr rho - 1|
    double hermiticity_defect{};
};

// Classic RK4 over [t, t + dt] from generator samples at t, t + dt/2 and t + dt,
// followed by re-Hermitisation and trace renormalisation.
StepResult step_state(const DensityMatrix& rho, double dt, const GeneratorSample& g0,
                      const GeneratorSample& g_mid, const GeneratorSample& g1, GeneratorMode mode);

// Default memory window max(10 tau_C, 5 tau_B); a requested window that cuts off
// more than 1e-3 of |Phi| is extended and a warning appended.
double kernel_window(const BathSpec& spec, double requested, std::vector<std::string>* warnings);

} // namespace stirling
