// cycle.hpp — Four-stroke cycle driver: two cycles from a hot Gibbs state, second one recorded

#pragma once

#include <array>
#include <string>
#include <vector>

#include "stirling/bath.hpp"
#include "stirling/drive.hpp"
#include "stirling/generator.hpp"
#include "stirling/qops.hpp"

namespace stirling {

enum class HamiltonianVariant { Bare, Effective };

std::string to_string(HamiltonianVariant v);

struct CycleConfig {
    StrokeSchedule sched;
    BathSpec cold{5.0, 0.2, 0.6, 2.0, BathLabel::Cold};
    BathSpec hot{2.0, 0.17, 0.6, 2.0, BathLabel::Hot};
    double omega_lo{0.49};
    double omega_hi{0.78};
    double delta{0.1};
    double dt_max{0.0};             // 0: 0.02 * 2 pi / omega_hi
    std::size_t min_steps{200};     // per stroke
    GeneratorMode mode{GeneratorMode::Full};
    double window{0.0};             // memory window; 0: automatic
    bool full_history{false};       // integrate the whole coupled interval
    std::size_t sample_every{1};    // trajectory decimation in steps

    void validate() const;
    double resolved_dt_max() const;
    // Uniform steps used for a stroke of the given duration.
    std::size_t steps_for(double duration) const;
    // Step lengths of a stroke. A stroke that opens a bath-coupled interval starts
    // with a geometric ramp from 2e-3 (groups of four, doubling) up to the
    // uniform step, resolving the onset of the memory kernel.
    std::vector<double> stroke_steps(double duration, bool graded) const;

    // Reference parameters with tau_ab = tau_cd = tau_D and isochoric strokes 6 tau_D.
    static CycleConfig defaults();
};

// 1 / G(omega_r): relaxation time of a bath.
double relaxation_time(const BathSpec& spec);
// Driving-time unit: relaxation time of the hot bath of cfg.
double drive_time_unit(const CycleConfig& cfg);

struct TrajectoryPoint {
    double t{};
    Stroke stroke{Stroke::AB};
    double omega{};
    double q{};
    DensityMatrix rho;
    double polarization{};
    RateSet rates;
};

// Half-step samples of one stroke, enough to evaluate work and heat integrals.
struct EnergySample {
    double t{};
    PauliOperator rho;
    PauliOperator H;
    PauliOperator dH_dt;
    PauliOperator H_eff;
    PauliOperator drho_dt;
};

// Run of equal steps: samples [first, first + 2 steps] spaced dt/2.
struct StrokeSegment {
    std::size_t first{};
    std::size_t steps{};
    double dt{};
};

struct StrokeRecord {
    Stroke stroke{Stroke::AB};
    BathLabel bath{BathLabel::Hot};
    double t_start{};
    double duration{};
    std::vector<EnergySample> samples; // step ends and midpoints
    std::vector<StrokeSegment> segments;
    PauliOperator H_eff_before;        // left limit of H_eff at t_start
};

struct Hygiene {
    double max_trace_defect{};
    double max_hermiticity_defect{};
    double min_eigenvalue{1.0};
};

struct CycleRun {
    CycleConfig config;
    std::vector<TrajectoryPoint> trajectory;  // second cycle
    std::array<StrokeRecord, 4> strokes;      // second cycle, ab bc cd da
    DensityMatrix rho_a, rho_b, rho_c, rho_d; // stroke end points of the second cycle
    DensityMatrix rho_end;                    // state at 2T
    DensityMatrix rho_b_star, rho_d_star;     // fixed points of the generators frozen at b, d
    double periodicity_residual{};            // trace distance rho(2T) vs rho(T)
    Hygiene hygiene;
    double window_hot{};
    double window_cold{};
    std::vector<std::string> warnings;
};

CycleRun run_cycle(const CycleConfig& config);

struct DistanceDiagnostics {
    double b_to_b_star{}; // S(rho_b' || rho_b*)
    double d_to_d_star{}; // S(rho_d' || rho_d*)
    double b_to_c{};      // S(rho_b' || rho_c)
    double d_to_a{};      // S(rho_d' || rho_a)
};

DistanceDiagnostics distance_diagnostics(const CycleRun& run);

} // namespace stirling
