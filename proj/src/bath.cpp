// bath.cpp — Coupling spectrum, Fourier transforms and kernel moment tables

#include "stirling/bath.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace stirling {

std::string to_string(BathLabel label) { return label == BathLabel::Cold ? "cold" : "hot"; }

void BathSpec::validate() const {
    auto require = [&](bool ok, const char* what) {
        if (!ok) throw InvalidParameter(to_string(label) + " bath: " + what);
    };
    require(beta > 0.0 && std::isfinite(beta), "beta must be > 0");
    require(g > 0.0 && std::isfinite(g), "g must be > 0");
    require(omega_res > 0.0 && std::isfinite(omega_res), "omega_res must be > 0");
    require(f > 0.0 && std::isfinite(f), "f must be > 0");
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kLinearCells = 8;

// Lorentzian factor divided by w^2, finite at w = 0.
double lorentz_over_w2(double w, const BathSpec& s) {
    const double u = w * w / s.omega_res - s.omega_res;
    return s.g * s.g / (w * w + s.f * s.f * u * u);
}

// w / (1 - exp(-beta w)), with the limit 1/beta at w = 0.
double thermal_factor(double w, double beta) {
    if (w == 0.0) return 1.0 / beta;
    const double den = -std::expm1(-beta * w);
    if (!std::isfinite(den)) return 0.0;
    return w / den;
}

// G / w^2
double spectrum_over_w2(double w, const BathSpec& s) {
    return lorentz_over_w2(w, s) * thermal_factor(w, s.beta);
}

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(fftw_complex* p) const { fftw_free(p); }
};

// T(s_n) = \int dw F(w) exp(-i w s_n) on s_n = n ds, n < n_keep, evaluated as a
// rectangle sum over w_k = w_lo + k dw with dw ds = 2 pi / n_fft.
std::vector<std::vector<cplx>> fourier_sums(const std::vector<std::function<double(double)>>& fs,
                                            double w_lo, std::size_t n_fft, double ds,
                                            std::size_t n_keep) {
    const double dw = kTwoPi / (static_cast<double>(n_fft) * ds);
    std::unique_ptr<fftw_complex, FftwFree> buf(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n_fft)));
    fftw_plan plan;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n_fft), buf.get(), buf.get(), FFTW_FORWARD,
                                FFTW_ESTIMATE);
    }
    std::vector<std::vector<cplx>> out;
    out.reserve(fs.size());
    for (const auto& F : fs) {
        for (std::size_t k = 0; k < n_fft; ++k) {
            buf.get()[k][0] = F(w_lo + static_cast<double>(k) * dw);
            buf.get()[k][1] = 0.0;
        }
        fftw_execute(plan);
        std::vector<cplx> t(n_keep);
        for (std::size_t n = 0; n < n_keep; ++n) {
            const double s = static_cast<double>(n) * ds;
            t[n] = dw * std::polar(1.0, -w_lo * s) * cplx(buf.get()[n][0], buf.get()[n][1]);
        }
        out.push_back(std::move(t));
    }
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::size_t next_pow2(double x) {
    std::size_t n = 1;
    while (static_cast<double>(n) < x) n <<= 1;
    return n;
}

// Lower end of the frequency grid: G(-w) ~ exp(-beta |w|) is negligible below.
double negative_frequency_floor(const BathSpec& s) { return -std::max(60.0 / s.beta, 5.0 * s.omega_res); }

// \int_{-inf}^{inf} F(w) dw for F decaying at both ends, via w = +-exp(x).
double log_quadrature(const std::function<double(double)>& F) {
    const double x_lo = std::log(1e-10), x_hi = std::log(1e10), dx = 1e-3;
    const auto n = static_cast<std::size_t>((x_hi - x_lo) / dx);
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        const double x = x_lo + static_cast<double>(k) * dx;
        const double w = std::exp(x);
        const double wt = (k == 0 || k == n) ? 0.5 : 1.0;
        acc += wt * (F(w) + F(-w)) * w;
    }
    return acc * dx;
}

} // namespace

double coupling_spectrum(double omega, const BathSpec& spec) {
    if (omega == 0.0) return 0.0;
    return lorentz_over_w2(omega, spec) * omega * omega * thermal_factor(omega, spec.beta);
}

cplx CorrelationTable::at(double t) const {
    if (t < 0.0) return std::conj(at(-t));
    const double x = t / dt;
    const auto k = static_cast<std::size_t>(x);
    if (k + 1 >= values.size()) {
        if (k + 1 == values.size() && x - static_cast<double>(k) < 1e-9) return values.back();
        throw InvalidParameter("CorrelationTable::at: t beyond table horizon");
    }
    const double w = x - static_cast<double>(k);
    return (1.0 - w) * values[k] + w * values[k + 1];
}

CorrelationTable correlation_function(const BathSpec& spec, double dt, double t_max) {
    spec.validate();
    if (!(dt > 0.0) || !(t_max > dt)) throw InvalidParameter("correlation_function: need 0 < dt < t_max");

    // Frequency step <= 2 pi / (10 t_max); period in t well beyond the decay.
    const std::size_t n_fft = next_pow2(std::max(10.0 * t_max / dt, (4.0 * t_max + 400.0) / dt));
    const double w_lo = negative_frequency_floor(spec);
    const auto n_keep = static_cast<std::size_t>(std::llround(t_max / dt)) + 1;
    auto G = [&](double w) { return coupling_spectrum(w, spec); };
    auto sums = fourier_sums({G}, w_lo, n_fft, dt, n_keep);

    CorrelationTable table;
    table.dt = dt;
    table.values = std::move(sums[0]);
    const double dw = kTwoPi / (static_cast<double>(n_fft) * dt);
    table.omega_cutoff = w_lo + static_cast<double>(n_fft) * dw;

    // Refinement check: direct trapezoid at half the frequency step.
    for (double probe : {0.0, 0.25 * t_max, 0.5 * t_max}) {
        const double h = 0.5 * dw;
        const auto m = static_cast<std::size_t>((table.omega_cutoff - w_lo) / h);
        cplx acc = 0.0;
        for (std::size_t k = 0; k <= m; ++k) {
            const double w = w_lo + static_cast<double>(k) * h;
            const double wt = (k == 0 || k == m) ? 0.5 : 1.0;
            acc += wt * G(w) * std::polar(1.0, -w * probe);
        }
        acc *= h;
        const cplx fft_val = table.at(probe);
        if (std::abs(acc - fft_val) > 1e-3 * std::abs(table.values[0])) {
            std::ostringstream os;
            os << "correlation_function: quadrature not converged at t=" << probe
               << " (grid " << fft_val << " vs refined " << acc << ")";
            throw NumericalError(os.str());
        }
    }
    return table;
}

double spectrum_integral(const BathSpec& spec, double omega_cut, double d_omega) {
    const auto n = static_cast<std::size_t>(std::ceil(2.0 * omega_cut / d_omega));
    const double h = 2.0 * omega_cut / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        const double w = -omega_cut + static_cast<double>(k) * h;
        acc += ((k == 0 || k == n) ? 0.5 : 1.0) * coupling_spectrum(w, spec);
    }
    return acc * h;
}

double envelope_decay_time(const CorrelationTable& phi, double t_lo, double t_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t k = 0; k < phi.values.size(); ++k) {
        const double t = static_cast<double>(k) * phi.dt;
        if (t < t_lo || t > t_hi) continue;
        const double y = std::log(std::abs(phi.values[k]));
        sx += t; sy += y; sxx += t * t; sxy += t * y;
        ++n;
    }
    if (n < 3) throw InvalidParameter("envelope_decay_time: fit window too narrow");
    const double dn = static_cast<double>(n);
    const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
    if (!(slope < 0.0)) throw NumericalError("envelope_decay_time: |Phi| does not decay");
    return -1.0 / slope;
}

TimeScales time_scales(const BathSpec& spec) {
    spec.validate();
    TimeScales ts;
    ts.tau_R = 1.0 / coupling_spectrum(spec.omega_res, spec);
    ts.tau_B = kTwoPi / spec.omega_res;
    const auto phi = correlation_function(spec, 0.01, 6.0 * ts.tau_B);
    ts.tau_C = envelope_decay_time(phi, ts.tau_B, 5.0 * ts.tau_B);
    return ts;
}

MemoryKernel::MemoryKernel(const BathSpec& spec, double s_max, double spacing)
    : spec_(spec), s_max_(s_max), spacing_(spacing) {
    spec_.validate();
    if (!(s_max > 0.0) || !(spacing > 0.0)) throw InvalidParameter("MemoryKernel: need s_max, spacing > 0");

    const std::size_t n_fft = next_pow2((2.0 * s_max + 400.0) / spacing);
    const double w_lo = negative_frequency_floor(spec_);
    const double dw = kTwoPi / (static_cast<double>(n_fft) * spacing);
    omega_cutoff_ = w_lo + static_cast<double>(n_fft) * dw;
    const auto n_keep = static_cast<std::size_t>(std::ceil(s_max / spacing)) + 2;

    auto G = [&](double w) { return coupling_spectrum(w, spec_); };
    auto G_w = [&](double w) { return spectrum_over_w2(w, spec_) * w; };
    auto G_w2 = [&](double w) { return spectrum_over_w2(w, spec_); };
    auto sums = fourier_sums({G, G_w, G_w2}, w_lo, n_fft, spacing, n_keep);
    const auto& t_g = sums[0];
    const auto& t_c = sums[1];
    const auto& t_b = sums[2];

    // m0(s) = i (T_c(s) - T_c(0)),  m1(s) = T_b(s) - T_b(0) + i s T_c(s)
    phi_ = t_g;
    m0_.resize(n_keep);
    m1_.resize(n_keep);
    for (std::size_t n = 0; n < n_keep; ++n) {
        const double s = static_cast<double>(n) * spacing;
        m0_[n] = kI * (t_c[n] - t_c[0]);
        m1_[n] = t_b[n] - t_b[0] + kI * s * t_c[n];
    }

    // Truncation check: T_c(0) against the untruncated integral of G/w.
    const double reference = log_quadrature(G_w);
    if (std::abs(t_c[0] - reference) > 1e-3 * std::abs(reference)) {
        std::ostringstream os;
        os << "MemoryKernel: frequency quadrature not converged (" << t_c[0] << " vs "
           << reference << ")";
        throw NumericalError(os.str());
    }
}

MemoryKernel::Moments MemoryKernel::moments(double s) const {
    if (s < 0.0 || s > s_max_ + spacing_)
        throw InvalidParameter("MemoryKernel::moments: lag outside tabulated range");
    const double x = s / spacing_;
    const auto k = std::min(static_cast<std::size_t>(x), m0_.size() - 2);
    const double u = x - static_cast<double>(k);
    if (k < kLinearCells) {
        // Phi varies faster than the table spacing near zero lag.
        return {(1.0 - u) * m0_[k] + u * m0_[k + 1], (1.0 - u) * m1_[k] + u * m1_[k + 1]};
    }
    // Cubic Hermite with the known derivatives m0' = Phi, m1' = s Phi.
    const double u2 = u * u, u3 = u2 * u;
    const double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
    const double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
    const double s0 = static_cast<double>(k) * spacing_, s1 = s0 + spacing_;
    const cplx m0 = h00 * m0_[k] + h01 * m0_[k + 1] + spacing_ * (h10 * phi_[k] + h11 * phi_[k + 1]);
    const cplx m1 = h00 * m1_[k] + h01 * m1_[k + 1] +
                    spacing_ * (h10 * s0 * phi_[k] + h11 * s1 * phi_[k + 1]);
    return {m0, m1};
}

cplx MemoryKernel::phi(double s) const {
    if (s < 0.0) return std::conj(phi(-s));
    if (s > s_max_ + spacing_) throw InvalidParameter("MemoryKernel::phi: lag outside tabulated range");
    const double x = s / spacing_;
    const auto k = std::min(static_cast<std::size_t>(x), phi_.size() - 2);
    const double w = x - static_cast<double>(k);
    return (1.0 - w) * phi_[k] + w * phi_[k + 1];
}

} // namespace stirling
