// drive.hpp — Linear frequency ramps, stroke schedule and the driven Hamiltonian

#pragma once

#include <array>
#include <string>

#include "stirling/bath.hpp"
#include "stirling/qops.hpp"

namespace stirling {

enum class DriveDirection { Compress, Expand, Hold };

// One stroke of the drive. omega(t) is linear in t; a hold stroke sits at
// omega_hi when hold_high is set, else at omega_lo.
struct DriveProtocol {
    double omega_lo{0.49};
    double omega_hi{0.78};
    double delta{0.1};
    DriveDirection direction{DriveDirection::Hold};
    double duration{1.0};
    bool hold_high{false};

    void validate() const;
    double omega_start() const;
    double omega_end() const;
    double omega_at(double t) const;
    double omega_rate() const { return (omega_end() - omega_start()) / duration; }
};

struct DriveSample {
    PauliOperator H;
    PauliOperator dH_dt;
    double q{};
    double omega{};
};

// H = q sz + Delta sx with q = sqrt(omega^2/4 - Delta^2); dH/dt = qdot sz.
DriveSample hamiltonian_at(double t, const DriveProtocol& proto);

// Delta sz - q sx: the direction of the counter-rotating Lamb shift.
PauliOperator counter_rotating_axis(double q, double delta);

enum class Stroke { AB = 0, BC = 1, CD = 2, DA = 3 };

inline constexpr std::array<Stroke, 4> kStrokes{Stroke::AB, Stroke::BC, Stroke::CD, Stroke::DA};

std::string to_string(Stroke s);

struct StrokeSchedule {
    double tau_ab{1.0};
    double tau_bc{1.0};
    double tau_cd{1.0};
    double tau_da{1.0};

    void validate() const;
    double period() const { return tau_ab + tau_bc + tau_cd + tau_da; }
    double duration(Stroke s) const;
    // Offset of the stroke within one cycle.
    double offset(Stroke s) const;
    static BathLabel active_bath(Stroke s);
    // Coupling switch of the given bath during stroke s.
    static double lambda(Stroke s, BathLabel bath) { return active_bath(s) == bath ? 1.0 : 0.0; }
};

DriveProtocol stroke_protocol(Stroke s, const StrokeSchedule& sched, double omega_lo,
                              double omega_hi, double delta);

struct StrokeInfo {
    int cycle{};
    Stroke stroke{Stroke::AB};
    BathLabel bath{BathLabel::Hot};
    DriveProtocol proto;
    double t_start{}; // absolute start time of the stroke
    double t_local{}; // t - t_start
};

// Stroke containing t in [0, 2T); boundaries belong to the succeeding stroke.
StrokeInfo schedule_lookup(double t, const StrokeSchedule& sched, double omega_lo,
                           double omega_hi, double delta);

} // namespace stirling
