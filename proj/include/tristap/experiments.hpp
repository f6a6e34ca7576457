// experiments.hpp — scenario runners, parameter sweeps, and mismatch studies.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tristap/dynamics.hpp"

namespace tristap {

enum class Scenario { stap_closed, stirap_closed, stap_open };

Scenario scenario_from_string(const std::string& name);
std::string scenario_name(Scenario s);

struct ScenarioParams {
    double omega0 = 0.2;
    double delta = 3.0;
    double tf = 40.0;
    double kappa = 0.0;
    double gamma = 0.0;
    std::int64_t steps = 0; // 0: default_steps(tf)
    bool full_space = false; // dissipative runs on the full product space
    int samples = kDefaultSamples;

    void validate() const;
    std::int64_t effective_steps() const;
};

struct ScenarioResult {
    RunResult run;
    ValidityReport validity; // populated for the detuned scenarios
    std::vector<std::string> warnings;
    double fidelity_final = 0.0;
};

// detuned counter-diabatic drive, 18-state space, fidelity against the singlet
ScenarioResult run_stap_closed(const ScenarioParams& p);
// bare resonant passage, fidelity against its own endpoint state
ScenarioResult run_stirap_closed(const ScenarioParams& p);
// detuned drive with cavity decay and spontaneous emission on the
// jump-closure space (or the full product space when full_space is set)
ScenarioResult run_stap_open(const ScenarioParams& p);

ScenarioResult run_scenario(Scenario s, const ScenarioParams& p);

// ------------------------------- sweeps --------------------------------------

struct SweepAxis {
    std::string name; // one of omega0, delta, tf, kappa, gamma
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;

    double value(int i) const;
    void validate() const;
};

struct SweepSpec {
    Scenario scenario = Scenario::stap_closed;
    SweepAxis axis1, axis2;
    ScenarioParams base;
    int threads = 0; // 0: hardware concurrency
};

struct SweepCell {
    double a1 = 0.0, a2 = 0.0;
    double fidelity = 0.0; // NaN when status != "ok"
    std::string status;
};

struct SweepTable {
    std::string axis1_name, axis2_name;
    std::vector<SweepCell> cells; // axis1-major deterministic order
};

// Evaluates the grid concurrently; a failed cell records NaN plus the reason
// and the sweep continues.
SweepTable sweep(const SweepSpec& spec);

// ------------------------------ mismatch -------------------------------------

// Relative deviations (actual - ideal)/ideal. The pulses are synthesized from
// the ideal parameters; coupling and detuning deviations alter the system
// Hamiltonian only; omega0 and tf deviations perturb the design inputs (the
// operation-time deviation extends the integration horizon, with the pulse
// formulas evaluated as designed).
struct MismatchSpec {
    double omega0 = 0.0;
    double tf = 0.0;
    double coupling = 0.0;
    double delta = 0.0;

    void validate() const;
};

double run_mismatch(const MismatchSpec& spec, Scenario scenario,
                    const ScenarioParams& base);

// dissipative spot check at the quoted cavity parameters
// (kappa = 0.0047, gamma = 0.0035, omega0 = 0.2, delta = 3, tf = 40)
double experimental_point();

const std::vector<std::string>& sweep_parameter_names();

} // namespace tristap
