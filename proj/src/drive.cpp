// drive.cpp — Linear frequency ramps, stroke schedule and the driven Hamiltonian

#include "stirling/drive.hpp"

#include <cmath>
#include <sstream>

namespace stirling {

void DriveProtocol::validate() const {
    if (!(delta > 0.0)) throw InvalidParameter("drive: delta must be > 0");
    if (!(2.0 * delta < omega_lo))
        throw InvalidParameter("drive: need 2*delta < omega_lo so that q(t) stays real");
    if (!(omega_lo <= omega_hi)) throw InvalidParameter("drive: need omega_lo <= omega_hi");
    if (!(duration > 0.0) || !std::isfinite(duration))
        throw InvalidParameter("drive: duration must be > 0");
}

double DriveProtocol::omega_start() const {
    switch (direction) {
    case DriveDirection::Compress: return omega_hi;
    case DriveDirection::Expand: return omega_lo;
    case DriveDirection::Hold: break;
    }
    return hold_high ? omega_hi : omega_lo;
}

double DriveProtocol::omega_end() const {
    switch (direction) {
    case DriveDirection::Compress: return omega_lo;
    case DriveDirection::Expand: return omega_hi;
    case DriveDirection::Hold: break;
    }
    return hold_high ? omega_hi : omega_lo;
}

double DriveProtocol::omega_at(double t) const {
    const double x = t / duration;
    return omega_start() + (omega_end() - omega_start()) * x;
}

DriveSample hamiltonian_at(double t, const DriveProtocol& proto) {
    const double slack = 1e-9 * proto.duration;
    if (t < -slack || t > proto.duration + slack) {
        std::ostringstream os;
        os << "hamiltonian_at: t=" << t << " outside stroke [0, " << proto.duration << "]";
        throw InvalidParameter(os.str());
    }
    DriveSample s;
    s.omega = proto.omega_at(t);
    const double q2 = 0.25 * s.omega * s.omega - proto.delta * proto.delta;
    if (!(q2 > 0.0)) {
        std::ostringstream os;
        os << "hamiltonian_at: omega/2=" << 0.5 * s.omega << " <= delta=" << proto.delta;
        throw InvalidParameter(os.str());
    }
    s.q = std::sqrt(q2);
    s.H = hamiltonian(s.q, proto.delta);
    const double qdot = s.omega * proto.omega_rate() / (4.0 * s.q);
    s.dH_dt = {0.0, 0.0, 0.0, qdot};
    return s;
}

PauliOperator counter_rotating_axis(double q, double delta) { return {0.0, -q, 0.0, delta}; }

std::string to_string(Stroke s) {
    switch (s) {
    case Stroke::AB: return "ab";
    case Stroke::BC: return "bc";
    case Stroke::CD: return "cd";
    case Stroke::DA: return "da";
    }
    return "?";
}

void StrokeSchedule::validate() const {
    for (Stroke s : kStrokes) {
        const double d = duration(s);
        if (!(d > 0.0) || !std::isfinite(d))
            throw InvalidParameter("schedule: tau_" + to_string(s) + " must be > 0");
    }
}

double StrokeSchedule::duration(Stroke s) const {
    switch (s) {
    case Stroke::AB: return tau_ab;
    case Stroke::BC: return tau_bc;
    case Stroke::CD: return tau_cd;
    case Stroke::DA: return tau_da;
    }
    return 0.0;
}

double StrokeSchedule::offset(Stroke s) const {
    double acc = 0.0;
    for (Stroke x : kStrokes) {
        if (x == s) break;
        acc += duration(x);
    }
    return acc;
}

BathLabel StrokeSchedule::active_bath(Stroke s) {
    return (s == Stroke::AB || s == Stroke::DA) ? BathLabel::Hot : BathLabel::Cold;
}

DriveProtocol stroke_protocol(Stroke s, const StrokeSchedule& sched, double omega_lo,
                              double omega_hi, double delta) {
    DriveProtocol p;
    p.omega_lo = omega_lo;
    p.omega_hi = omega_hi;
    p.delta = delta;
    p.duration = sched.duration(s);
    switch (s) {
    case Stroke::AB: p.direction = DriveDirection::Compress; break;
    case Stroke::BC: p.direction = DriveDirection::Hold; break;
    case Stroke::CD: p.direction = DriveDirection::Expand; break;
    case Stroke::DA: p.direction = DriveDirection::Hold; p.hold_high = true; break;
    }
    p.validate();
    return p;
}

StrokeInfo schedule_lookup(double t, const StrokeSchedule& sched, double omega_lo,
                           double omega_hi, double delta) {
    sched.validate();
    const double T = sched.period();
    if (!(t >= 0.0) || !(t < 2.0 * T)) {
        std::ostringstream os;
        os << "schedule_lookup: t=" << t << " outside [0, " << 2.0 * T << ")";
        throw InvalidParameter(os.str());
    }
    StrokeInfo info;
    info.cycle = t < T ? 0 : 1;
    const double base = info.cycle * T;
    const double local = t - base;
    double start = 0.0;
    info.stroke = Stroke::DA;
    for (Stroke s : kStrokes) {
        if (local < start + sched.duration(s) || s == Stroke::DA) {
            info.stroke = s;
            break;
        }
        start += sched.duration(s);
    }
    info.bath = StrokeSchedule::active_bath(info.stroke);
    info.proto = stroke_protocol(info.stroke, sched, omega_lo, omega_hi, delta);
    info.t_start = base + start;
    info.t_local = t - info.t_start;
    return info;
}

} // namespace stirling
