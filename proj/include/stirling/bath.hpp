// bath.hpp — Resonator bath spectra, correlation functions and derived time scales

#pragma once

#include <string>
#include <vector>

#include "stirling/qops.hpp"

namespace stirling {

enum class BathLabel { Cold, Hot };

std::string to_string(BathLabel label);

// One LC-resonator bath: inverse temperature, coupling amplitude, resonance
// frequency and quality factor.
struct BathSpec {
    double beta{1.0};
    double g{0.1};
    double omega_res{0.6};
    double f{2.0};
    BathLabel label{BathLabel::Hot};

    void validate() const;
};

// G(w) = g^2 / (1 + f^2 (w/w_r - w_r/w)^2) * w / (1 - exp(-beta w)),
// continued analytically to w < 0 so that G(-w) = exp(-beta w) G(w).
// G(0) = 0.
double coupling_spectrum(double omega, const BathSpec& spec);

// Correlation function Phi(t) = \int dw G(w) exp(-i w t), sampled on t = k dt.
// The frequency integral is truncated at omega_cutoff; G decays only as 1/w, so
// Phi(0) grows logarithmically with the cutoff while Phi(t > 0) converges.
struct CorrelationTable {
    double dt{};
    std::vector<cplx> values;
    double omega_cutoff{};

    double t_max() const { return dt * static_cast<double>(values.size() - 1); }
    // Linear interpolation; negative t uses Phi(-t) = Phi(t)*.
    cplx at(double t) const;
};

CorrelationTable correlation_function(const BathSpec& spec, double dt, double t_max);

// Trapezoidal \int G(w) dw over [-omega_cut, omega_cut] on a uniform grid.
double spectrum_integral(const BathSpec& spec, double omega_cut, double d_omega);

struct TimeScales {
    double tau_R{}; // 1 / G(w_r)
    double tau_B{}; // 2 pi / w_r
    double tau_C{}; // decay time of the |Phi(t)| envelope
};

TimeScales time_scales(const BathSpec& spec);

// e^{-1} decay time of the resonant envelope of |Phi|, from a log-linear
// least-squares fit over [t_lo, t_hi].
double envelope_decay_time(const CorrelationTable& phi, double t_lo, double t_hi);

// Cumulative moments of the correlation function,
//   m0(s) = \int_0^s Phi(u) du,   m1(s) = \int_0^s u Phi(u) du,
// tabulated on a fine lag grid. Both converge as the frequency cutoff grows,
// which makes them the quantities the kernel quadrature consumes.
class MemoryKernel {
public:
    struct Moments {
        cplx m0;
        cplx m1;
    };

    MemoryKernel(const BathSpec& spec, double s_max, double spacing = 2e-3);

    Moments moments(double s) const;
    cplx phi(double s) const;

    const BathSpec& spec() const { return spec_; }
    double s_max() const { return s_max_; }
    double spacing() const { return spacing_; }
    double omega_cutoff() const { return omega_cutoff_; }

private:
    BathSpec spec_;
    double s_max_;
    double spacing_;
    double omega_cutoff_{};
    std::vector<cplx> m0_;
    std::vector<cplx> m1_;
    std::vector<cplx> phi_;
};

} // namespace stirling
