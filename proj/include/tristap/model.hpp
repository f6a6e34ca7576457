// model.hpp — Hamiltonians, collapse channels, and the named states of the
// three-atom singlet scheme.
//
// Conventions (documented because sign slips here are fatal):
//   chi    = (-|phi(g2,g0,g1)> + |phi(g2,g1,g0)>)/sqrt(2)   (the initial state)
//   varpi  = (|g0,g2,g1> - |g0,g1,g2> + |g1,g0,g2> - |g1,g2,g0>)/2
//   singlet = chi/sqrt(3) + varpi*sqrt(2/3)  — the totally antisymmetric
//     three-level state; the detuned counter-diabatic drive converges to it.
//   stirap_target = chi/sqrt(3) - varpi*sqrt(2/3) — the endpoint of the bare
//     resonant passage, which differs from the singlet by a local sign flip.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tristap/hilbert.hpp"
#include "tristap/pulses.hpp"

namespace tristap {

struct ModelParams {
    double coupling = 1.0; // lambda, the global frequency scale
    double delta = 0.0;    // detuning, units of lambda
    double kappa = 0.0;    // cavity decay per mode, units of lambda
    double gamma = 0.0;    // atomic decay per channel, units of lambda

    void validate() const;
};

// H(t) = constant + sum_k c_k(t) A_k + conj(c_k(t)) A_k^dagger.
// Generators are pure; evaluation at different t is safe concurrently.
struct DriveTerm {
    std::function<Complex(double)> coefficient;
    Matrix op;
};

class TimeDependentHamiltonian {
public:
    TimeDependentHamiltonian(SpacePtr space, Matrix constant,
                             std::vector<DriveTerm> terms,
                             std::vector<std::string> basis_labels = {});

    // the generator contract: t -> Hermitian matrix
    Matrix at(double t) const;

    std::size_t dimension() const { return std::size_t(constant_.rows()); }
    const SpacePtr& space() const { return space_; } // null for reduced bases
    const Matrix& constant_part() const { return constant_; }
    const std::vector<DriveTerm>& terms() const { return terms_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }

private:
    SpacePtr space_;
    Matrix constant_;
    std::vector<DriveTerm> terms_;
    std::vector<std::string> basis_labels_;
};

// ---- full-space models (18-state closure or any superset) ----

// resonant model: laser drives with the Gaussian envelopes, cavity at lambda
TimeDependentHamiltonian hamiltonian_resonant(const ModelParams& p,
                                              const PulseSchedule& s,
                                              const SpacePtr& space);

// detuned model: every |e> shifted by delta, drive amplitudes
// (omega', i omega'/sqrt(2), i omega'/sqrt(2)) synthesized from the
// counter-diabatic pulse
TimeDependentHamiltonian hamiltonian_apf(const ModelParams& p, const CddPulse& c,
                                         const SpacePtr& space);

struct JumpOperator {
    double rate = 0.0; // kappa or gamma; the collapse operator is sqrt(rate)*op
    Operator op;
};

// 2 cavity channels + 9 atomic channels, in a fixed order
std::vector<JumpOperator> jump_operators(const ModelParams& p, const SpacePtr& space);

struct SpecialStates {
    Ket chi;
    Ket varpi;
    Ket psi1;          // the initial state; equals chi
    Ket singlet;       // target of the detuned counter-diabatic scheme
    Ket stirap_target; // endpoint of the bare resonant passage
    std::vector<Ket> cavity_eigenstates;   // 12 kets spanning the coupled sector
    std::vector<double> cavity_eigenvalues; // matching eigenvalues (units of lambda)
};

SpecialStates special_states(const SpacePtr& space);

// the seeds whose coupling closure is the working subspace
std::vector<BasisState> initial_seeds();

// ---- reduced models ----
// Basis (chi, psi2, varpi) for the 3-level generators; (chi, varpi) for the
// 2-level ones. These spaces carry labels instead of product basis states.

// couplings (omega1/sqrt(3), 2 omega3/sqrt(6)) from chi/varpi to the excited
// collective state
TimeDependentHamiltonian effective_zeno(const PulseSchedule& s);

// same structure with the counter-diabatic amplitudes plus the detuning on
// the excited collective state
TimeDependentHamiltonian effective_nonresonant(const CddPulse& c);

// adiabatic elimination of the excited collective state:
// <chi|H|varpi> = -i omega'^2/(3 delta); the common diagonal shift
// omega'^2/(3 delta) is removed
TimeDependentHamiltonian effective_eliminated(const CddPulse& c);

// transitionless generator i theta_dot |chi><varpi| + h.c.
TimeDependentHamiltonian cdd_hamiltonian(const PulseSchedule& s);

// isometries embedding the reduced bases into a product-state space
Matrix two_level_isometry(const SpacePtr& space);   // columns (chi, varpi)
Matrix three_level_isometry(const SpacePtr& space); // columns (chi, psi2, varpi)

} // namespace tristap
