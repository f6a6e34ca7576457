#include "tristap/observables.hpp"

namespace tristap {

namespace {

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* who) {
    if (!a || !b || !(*a == *b)) {
        throw ValidationError(std::string(who) + ": state and target live in different spaces");
    }
}

} // namespace

double fidelity(const Vector& state, const Vector& target) {
    if (state.size() != target.size()) {
        throw ValidationError("fidelity: dimension mismatch");
    }
    return std::norm(target.dot(state)); // Eigen dot conjugates the left factor
}

double fidelity(const Matrix& rho, const Vector& target) {
    if (rho.rows() != target.size() || rho.cols() != target.size()) {
        throw ValidationError("fidelity: dimension mismatch");
    }
    return std::abs(target.dot(rho * target));
}

double fidelity(const Ket& state, const Ket& target) {
    require_same_space(state.space, target.space, "fidelity");
    return fidelity(state.amplitudes, target.amplitudes);
}

double fidelity(const DensityMatrix& state, const Ket& target) {
    require_same_space(state.space, target.space, "fidelity");
    return fidelity(state.matrix, target.amplitudes);
}

double population(const Ket& state, const Ket& reference) {
    return fidelity(state, reference);
}

double population(const DensityMatrix& state, const Ket& reference) {
    return fidelity(state, reference);
}

StateDiagnostics diagnostics(const DensityMatrix& rho) {
    StateDiagnostics d;
    d.trace = rho.matrix.trace().real();
    d.hermiticity_defect = hermiticity_defect(rho.matrix);
    const Matrix sym = 0.5 * (rho.matrix + rho.matrix.adjoint());
    d.min_eigenvalue = eigh(sym).eigenvalues(0);
    d.purity = (rho.matrix * rho.matrix).trace().real();
    return d;
}

const std::vector<std::string>& population_labels() {
    static const std::vector<std::string> labels = {"chi", "varpi"};
    return labels;
}

} // namespace tristap
