// pulses.hpp — STIRAP envelopes, mixing angle, and the counter-diabatic drive.
//
// The two Gaussian envelopes realize a fractional passage: the mixing angle
// theta(t) = atan(Omega1 / (sqrt(2) Omega3)) runs from ~0 to atan(sqrt(2)).
// The counter-diabatic amplitude Omega' = sqrt(3 Delta dtheta/dt) delivers the
// same rotation at finite speed through a detuned drive.
#pragma once

#include <string>
#include <vector>

#include "tristap/errors.hpp"

namespace tristap {

struct PulseSchedule {
    double omega0 = 0.2;  // amplitude, units of the cavity coupling
    double alpha = 0.0;   // mixing target angle (radians)
    double t0 = 0.0;      // envelope offset from mid-time
    double tc = 0.0;      // envelope width
    double tf = 0.0;      // total duration
    double t_shift = 0.0; // rigid time translation of all centers

    // default preset: tan(alpha) = 2, t0 = 0.14 tf, tc = 0.19 tf
    static PulseSchedule preset(double omega0, double tf);

    void validate() const;
};

struct Envelopes {
    double omega1 = 0.0;
    double omega3 = 0.0; // omega2 is defined equal to omega3
};

Envelopes envelopes(const PulseSchedule& s, double t);
// analytic time derivatives of the envelopes
Envelopes envelope_rates(const PulseSchedule& s, double t);

struct MixingAngle {
    double theta = 0.0; // in [0, pi/2) for nonnegative envelopes
    double omega = 0.0; // sqrt(omega1^2 + 2 omega3^2)
};

// throws ValidationError when both envelopes vanish
MixingAngle mixing_angle(const PulseSchedule& s, double t);

// closed form sqrt(2)(d1*o3 - d3*o1)/omega^2 with analytic derivatives
double theta_dot(const PulseSchedule& s, double t);

struct CddPulse {
    PulseSchedule schedule;
    double delta = 0.0; // detuning, units of the cavity coupling

    void validate() const;
};

// Omega'(t) = sqrt(3 Delta max(theta_dot, 0)). Values of theta_dot in
// [-1e-12, 0) are clamped to zero (roundoff); anything more negative means the
// envelope family cannot realize the drive and raises NumericalError.
double cdd_amplitude(const CddPulse& c, double t);

struct ValidityReport {
    double max_drive = 0.0;              // max_t Omega'
    double max_drive_over_coupling = 0.0; // max_t Omega'/lambda
    double max_drive_over_detuning = 0.0; // max_t Omega'/Delta
    double max_dimensionless = 0.0;       // max_t Omega' sqrt(tf/(6 sqrt(2) Delta))
    bool zeno_strained = false;           // max Omega'/lambda > 0.5
    bool elimination_strained = false;    // max Omega'/Delta > 0.5

    std::vector<std::string> warnings() const;
};

ValidityReport validity_report(const CddPulse& c, double coupling,
                               int grid_points = 4001);

} // namespace tristap
