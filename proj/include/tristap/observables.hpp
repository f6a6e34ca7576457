// observables.hpp — fidelity, populations, and density-matrix diagnostics.
//
// The fidelity is |<target|rho|target>|, linear in rho; for a pure state it
// reduces to |<target|psi>|^2.
#pragma once

#include <string>
#include <vector>

#include "tristap/hilbert.hpp"

namespace tristap {

struct DensityMatrix {
    SpacePtr space;
    Matrix matrix;
};

// low-level forms on raw vectors/matrices (used by the reduced-basis models)
double fidelity(const Vector& state, const Vector& target);
double fidelity(const Matrix& rho, const Vector& target);

// space-checked forms
double fidelity(const Ket& state, const Ket& target);
double fidelity(const DensityMatrix& state, const Ket& target);

// population is the same quadratic form against an arbitrary reference ket
double population(const Ket& state, const Ket& reference);
double population(const DensityMatrix& state, const Ket& reference);

struct StateDiagnostics {
    double trace = 0.0;
    double hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    double purity = 0.0;
};

StateDiagnostics diagnostics(const DensityMatrix& rho);

// the registered population labels recorded by the scenario runners
const std::vector<std::string>& population_labels(); // {"chi", "varpi"}

struct ObservableRow {
    double t = 0.0;
    double fidelity = 0.0;
    std::vector<double> populations; // aligned with population_labels()
    double trace = 0.0;
    double norm = 0.0;
};

} // namespace tristap
