// dynamics.hpp — fixed-step RK4 propagation of kets and density matrices,
// with step-halving convergence control.
//
// No renormalization or positivity projection is applied mid-run: norm and
// trace drift are diagnostics, not knobs.
#pragma once

#include <cstdint>
#include <functional>
#include <limits>

#include "tristap/model.hpp"
#include "tristap/observables.hpp"

namespace tristap {

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    std::int64_t steps = 0;

    double dt() const { return (t_end - t_start) / double(steps); }
    void validate() const;
};

struct RunResult {
    TimeGrid grid{};
    std::vector<ObservableRow> records;
    Vector final_state;   // set for ket runs
    Matrix final_density; // set for density runs
    bool is_density = false;
    bool converged = false;
    double dt_used = 0.0;
    double error_estimate = std::numeric_limits<double>::quiet_NaN();
};

// Samplers fill the per-sample observable rows; when empty, only t/norm/trace
// are recorded. Samples are spaced evenly across the grid (default 200 rows,
// endpoints included).
using StateSampler = std::function<ObservableRow(double, const Vector&)>;
using DensitySampler = std::function<ObservableRow(double, const Matrix&)>;

inline constexpr int kDefaultSamples = 200;

RunResult propagate_state(const TimeDependentHamiltonian& h, const Ket& psi0,
                          const TimeGrid& grid, const StateSampler& sampler = {},
                          int max_samples = kDefaultSamples);

// Raw-vector form for the reduced-basis models (no space attached).
RunResult propagate_state(const TimeDependentHamiltonian& h, const Vector& psi0,
                          const TimeGrid& grid, const StateSampler& sampler = {},
                          int max_samples = kDefaultSamples);

RunResult propagate_density(const TimeDependentHamiltonian& h,
                            const std::vector<JumpOperator>& jumps,
                            const DensityMatrix& rho0, const TimeGrid& grid,
                            const DensitySampler& sampler = {},
                            int max_samples = kDefaultSamples);

RunResult propagate_density(const TimeDependentHamiltonian& h,
                            const std::vector<JumpOperator>& jumps,
                            const Matrix& rho0, const TimeGrid& grid,
                            const DensitySampler& sampler = {},
                            int max_samples = kDefaultSamples);

// Doubles the step count until the final-state distance between successive
// runs drops below tol (trace distance for densities, 1 - |overlap| for kets).
// Returns the finer run with error_estimate set. Caps at 2^20 steps.
inline constexpr std::int64_t kConvergeStepCap = std::int64_t(1) << 20;

RunResult converge(const std::function<RunResult(std::int64_t)>& run,
                   std::int64_t initial_steps, double tol);

// distance helpers used by converge and the tests
double final_state_distance(const RunResult& a, const RunResult& b);
double trace_distance(const Matrix& a, const Matrix& b);

// default step count for a run of duration tf: 200 steps per unit time,
// at least 1000
std::int64_t default_steps(double tf);

} // namespace tristap
