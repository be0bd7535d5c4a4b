// oracles.hpp — Independent reference formulas for the unit tests

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using cd = std::complex<double>;

// Direct transcription of the bath spectrum; no shared code with the library.
inline double spectrum(double w, double beta, double g, double wr, double f) {
    const double lor = g * g / (w * w + f * f * (w * w / wr - wr) * (w * w / wr - wr));
    const double bose = std::abs(w) < 1e-12 ? 1.0 / beta : w / (1.0 - std::exp(-beta * w));
    return lor * w * w * bose;
}

// Two-level thermal quantities at splitting w.
inline double excited_population(double w, double beta) { return 1.0 / (1.0 + std::exp(beta * w)); }
inline double energy(double w, double beta) { return -0.5 * w * std::tanh(0.5 * beta * w); }
inline double entropy(double w, double beta) {
    const double p = excited_population(w, beta);
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

// exp(-i H t) for H = h.sigma, as 2x2 matrix entries (row-major).
inline void su2_exp(double hx, double hy, double hz, double t, cd out[4]) {
    const double n = std::sqrt(hx * hx + hy * hy + hz * hz);
    const double c = std::cos(n * t), s = std::sin(n * t);
    const cd I(0.0, 1.0);
    out[0] = c - I * s * hz / n;
    out[1] = -I * s * (hx - I * hy) / n;
    out[2] = -I * s * (hx + I * hy) / n;
    out[3] = c + I * s * hz / n;
}

} // namespace oracle
