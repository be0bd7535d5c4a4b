// test_drive.cpp — Drive protocol, Hamiltonian samples and the stroke schedule

#include "doctest.h"
#include "stirling/drive.hpp"

using namespace stirling;

TEST_SUITE("drive") {

TEST_CASE("linear frequency ramp and Hamiltonian") {
    DriveProtocol p;
    p.direction = DriveDirection::Compress;
    p.duration = 10.0;
    CHECK(p.omega_start() == doctest::Approx(0.78));
    CHECK(p.omega_end() == doctest::Approx(0.49));
    CHECK(p.omega_at(5.0) == doctest::Approx(0.5 * (0.78 + 0.49)));
    for (double t : {0.0, 3.3, 10.0}) {
        const DriveSample s = hamiltonian_at(t, p);
        const double w = p.omega_at(t);
        CHECK(s.omega == doctest::Approx(w));
        CHECK(s.q == doctest::Approx(std::sqrt(0.25 * w * w - 0.01)));
        CHECK((s.H - hamiltonian(s.q, 0.1)).max_abs() < 1e-15);
        // splitting of H equals omega
        CHECK(2.0 * std::hypot(s.H.cz.real(), s.H.cx.real()) == doctest::Approx(w).epsilon(1e-14));
    }
    const double h = 1e-5, t = 4.0;
    const PauliOperator fd = (hamiltonian_at(t + h, p).H - hamiltonian_at(t - h, p).H) * (0.5 / h);
    CHECK((fd - hamiltonian_at(t, p).dH_dt).max_abs() < 1e-9);
    CHECK_THROWS_AS(hamiltonian_at(10.5, p), InvalidParameter);
    CHECK_THROWS_AS(hamiltonian_at(-0.1, p), InvalidParameter);
}

TEST_CASE("hold strokes are static") {
    DriveProtocol p;
    p.direction = DriveDirection::Hold;
    p.hold_high = true;
    p.duration = 3.0;
    const DriveSample s = hamiltonian_at(1.0, p);
    CHECK(s.omega == doctest::Approx(0.78));
    CHECK(s.dH_dt.max_abs() == 0.0);
}

TEST_CASE("protocol validation") {
    DriveProtocol p;
    p.delta = 0.3;
    CHECK_THROWS_AS(p.validate(), InvalidParameter);
    p.delta = 0.1;
    p.duration = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidParameter);
}

TEST_CASE("counter-rotating axis is orthogonal to H") {
    for (double q : {0.1, 0.2, 0.38}) {
        const PauliOperator X = counter_rotating_axis(q, 0.1);
        CHECK(std::abs(trace_product(X, hamiltonian(q, 0.1))) < 1e-15);
        CHECK(X.is_hermitian());
    }
}

TEST_CASE("stroke schedule") {
    const StrokeSchedule s{2.0, 5.0, 3.0, 7.0};
    CHECK(s.period() == doctest::Approx(17.0));
    CHECK(s.offset(Stroke::CD) == doctest::Approx(7.0));
    CHECK(StrokeSchedule::active_bath(Stroke::AB) == BathLabel::Hot);
    CHECK(StrokeSchedule::active_bath(Stroke::DA) == BathLabel::Hot);
    CHECK(StrokeSchedule::active_bath(Stroke::BC) == BathLabel::Cold);
    CHECK(StrokeSchedule::active_bath(Stroke::CD) == BathLabel::Cold);
    CHECK(StrokeSchedule::lambda(Stroke::CD, BathLabel::Hot) == 0.0);

    const auto ab = stroke_protocol(Stroke::AB, s, 0.49, 0.78, 0.1);
    const auto bc = stroke_protocol(Stroke::BC, s, 0.49, 0.78, 0.1);
    const auto cd = stroke_protocol(Stroke::CD, s, 0.49, 0.78, 0.1);
    const auto da = stroke_protocol(Stroke::DA, s, 0.49, 0.78, 0.1);
    CHECK(ab.omega_start() == doctest::Approx(0.78));
    CHECK(ab.omega_end() == doctest::Approx(0.49));
    CHECK(bc.omega_at(2.0) == doctest::Approx(0.49));
    CHECK(cd.omega_start() == doctest::Approx(0.49));
    CHECK(cd.omega_end() == doctest::Approx(0.78));
    CHECK(da.omega_at(1.0) == doctest::Approx(0.78));

    const StrokeInfo i0 = schedule_lookup(0.0, s, 0.49, 0.78, 0.1);
    CHECK(i0.stroke == Stroke::AB);
    CHECK(i0.cycle == 0);
    const StrokeInfo i1 = schedule_lookup(2.0, s, 0.49, 0.78, 0.1);
    CHECK(i1.stroke == Stroke::BC);
    CHECK(i1.t_local == doctest::Approx(0.0));
    const StrokeInfo i2 = schedule_lookup(17.0 + 8.0, s, 0.49, 0.78, 0.1);
    CHECK(i2.cycle == 1);
    CHECK(i2.stroke == Stroke::CD);
    CHECK(i2.t_local == doctest::Approx(1.0));
    CHECK(i2.bath == BathLabel::Cold);
    CHECK_THROWS_AS(schedule_lookup(34.0, s, 0.49, 0.78, 0.1), InvalidParameter);
    CHECK_THROWS_AS((StrokeSchedule{0.0, 1.0, 1.0, 1.0}.validate()), InvalidParameter);
}

}
