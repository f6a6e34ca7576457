#include "tristap/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tristap {

PulseSchedule PulseSchedule::preset(double omega0, double tf) {
    PulseSchedule s;
    s.omega0 = omega0;
    s.alpha = std::atan(2.0);
    s.t0 = 0.14 * tf;
    s.tc = 0.19 * tf;
    s.tf = tf;
    s.validate();
    return s;
}

void PulseSchedule::validate() const {
    if (!(omega0 > 0)) throw ValidationError("pulse schedule: omega0 must be positive");
    if (!(tc > 0)) throw ValidationError("pulse schedule: tc must be positive");
    if (!(tf > 0)) throw ValidationError("pulse schedule: tf must be positive");
    if (!(t0 >= 0 && t0 < tf / 2)) {
        throw ValidationError("pulse schedule: t0 must lie in [0, tf/2)");
    }
}

Envelopes envelopes(const PulseSchedule& s, double t) {
    const double u = t - s.t_shift;
    const double x = (u - s.tf / 2 - s.t0) / s.tc;
    const double y = (u - s.tf / 2 + s.t0) / s.tc;
    const double late = std::exp(-x * x);
    const double early = std::exp(-y * y);
    return {std::sin(s.alpha) * s.omega0 * late,
            std::cos(s.alpha) * s.omega0 * late + s.omega0 * early};
}

Envelopes envelope_rates(const PulseSchedule& s, double t) {
    const double u = t - s.t_shift;
    const double x = (u - s.tf / 2 - s.t0) / s.tc;
    const double y = (u - s.tf / 2 + s.t0) / s.tc;
    const double dlate = -2.0 * x / s.tc * std::exp(-x * x);
    const double dearly = -2.0 * y / s.tc * std::exp(-y * y);
    return {std::sin(s.alpha) * s.omega0 * dlate,
            std::cos(s.alpha) * s.omega0 * dlate + s.omega0 * dearly};
}

MixingAngle mixing_angle(const PulseSchedule& s, double t) {
    const auto [o1, o3] = envelopes(s, t);
    if (o1 == 0.0 && o3 == 0.0) {
        throw ValidationError("mixing_angle: undefined mixing angle (both envelopes zero)");
    }
    return {std::atan2(o1, std::sqrt(2.0) * o3),
            std::sqrt(o1 * o1 + 2.0 * o3 * o3)};
}

double theta_dot(const PulseSchedule& s, double t) {
    const auto [o1, o3] = envelopes(s, t);
    const auto [d1, d3] = envelope_rates(s, t);
    const double denom = o1 * o1 + 2.0 * o3 * o3;
    if (denom == 0.0) {
        throw ValidationError("theta_dot: undefined mixing angle (both envelopes zero)");
    }
    return std::sqrt(2.0) * (d1 * o3 - d3 * o1) / denom;
}

void CddPulse::validate() const {
    schedule.validate();
    if (!(delta > 0)) throw ValidationError("cdd pulse: delta must be positive");
}

double cdd_amplitude(const CddPulse& c, double t) {
    const double td = theta_dot(c.schedule, t);
    if (td < -1e-12) {
        std::ostringstream os;
        os << "cdd_amplitude: negative transitionless rate " << td << " at t=" << t;
        throw NumericalError(os.str());
    }
    return std::sqrt(3.0 * c.delta * std::max(td, 0.0));
}

std::vector<std::string> ValidityReport::warnings() const {
    std::vector<std::string> w;
    if (zeno_strained) w.push_back("Zeno condition strained");
    if (elimination_strained) w.push_back("elimination strained");
    return w;
}

ValidityReport validity_report(const CddPulse& c, double coupling, int grid_points) {
    c.validate();
    if (!(coupling > 0)) throw ValidationError("validity_report: coupling must be positive");
    if (grid_points < 2) throw ValidationError("validity_report: need at least 2 grid points");

    const double tf = c.schedule.tf;
    double peak = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double t = c.schedule.t_shift + tf * double(i) / double(grid_points - 1);
        peak = std::max(peak, cdd_amplitude(c, t));
    }
    ValidityReport r;
    r.max_drive = peak;
    r.max_drive_over_coupling = peak / coupling;
    r.max_drive_over_detuning = peak / c.delta;
    r.max_dimensionless = peak * std::sqrt(tf / (6.0 * std::sqrt(2.0) * c.delta));
    r.zeno_strained = r.max_drive_over_coupling > 0.5;
    r.elimination_strained = r.max_drive_over_detuning > 0.5;
    return r;
}

} // namespace tristap
