#include "tristap/model.hpp"

#include <cmath>
#include <sstream>

namespace tristap {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt3 = 1.7320508075688772;

// The 18 single-excitation configurations, in the conventional order used by
// the named states below. Entry k holds configuration k+1.
const std::array<BasisState, 18>& single_excitation_basis() {
    using L = Level;
    static const std::array<BasisState, 18> table = {{
        {{L::g2, L::g0, L::g1}, {0, 0}}, // 1
        {{L::e,  L::g0, L::g1}, {0, 0}}, // 2
        {{L::g0, L::g0, L::g1}, {1, 0}}, // 3
        {{L::g0, L::e,  L::g1}, {0, 0}}, // 4
        {{L::g0, L::g1, L::g1}, {0, 1}}, // 5
        {{L::g0, L::g1, L::e},  {0, 0}}, // 6
        {{L::g0, L::g1, L::g0}, {1, 0}}, // 7
        {{L::g1, L::g0, L::g1}, {0, 1}}, // 8
        {{L::g1, L::g0, L::e},  {0, 0}}, // 9
        {{L::g1, L::g0, L::g0}, {1, 0}}, // 10
        {{L::g1, L::e,  L::g0}, {0, 0}}, // 11
        {{L::g1, L::g1, L::g0}, {0, 1}}, // 12
        {{L::e,  L::g1, L::g0}, {0, 0}}, // 13
        {{L::g2, L::g1, L::g0}, {0, 0}}, // 14
        {{L::g0, L::g2, L::g1}, {0, 0}}, // 15
        {{L::g0, L::g1, L::g2}, {0, 0}}, // 16
        {{L::g1, L::g0, L::g2}, {0, 0}}, // 17
        {{L::g1, L::g2, L::g0}, {0, 0}}, // 18
    }};
    return table;
}

struct Component {
    int k;      // 1-based index into single_excitation_basis()
    double amp;
};

Ket make_ket(const SpacePtr& space, std::initializer_list<Component> comps) {
    const auto& basis = single_excitation_basis();
    Ket ket{space, Vector::Zero(Eigen::Index(space->dimension()))};
    for (const auto& c : comps) {
        const BasisState& s = basis[std::size_t(c.k - 1)];
        auto idx = space->index_of(s);
        if (!idx) {
            throw ValidationError("special_states: space is missing basis state " +
                                  s.label());
        }
        ket.amplitudes(Eigen::Index(*idx)) = c.amp;
    }
    ket.amplitudes /= ket.amplitudes.norm();
    return ket;
}

// Eigenvectors of the atom-cavity coupling restricted to the 12 coupled
// configurations (the coupling graph is a 12-cycle). Degenerate pairs are not
// mutually orthogonal in this conventional form; tests compare subspace
// projectors instead of individual columns.
struct EigenEntry {
    double value;
    std::initializer_list<Component> comps;
};

const std::vector<EigenEntry>& coupled_sector_table() {
    static const std::vector<EigenEntry> table = {
        {0.0, {{3,-1},{5,1},{7,-1},{8,1},{10,-1},{12,1}}},
        {0.0, {{2,-1},{4,1},{6,-1},{9,1},{11,-1},{13,1}}},
        {1.0, {{3,1},{4,1},{6,-1},{7,-1},{8,-1},{9,-1},{11,1},{12,1}}},
        {1.0, {{2,1},{4,-1},{5,-1},{7,1},{8,1},{10,-1},{11,-1},{13,1}}},
        {-1.0, {{3,1},{4,-1},{6,1},{7,-1},{8,-1},{9,1},{11,-1},{12,1}}},
        {-1.0, {{2,1},{4,-1},{5,1},{7,-1},{8,-1},{10,1},{11,-1},{13,1}}},
        {2.0, {{2,1},{3,1},{4,1},{5,1},{6,1},{7,1},{8,1},{9,1},{10,1},{11,1},{12,1},{13,1}}},
        {-2.0, {{2,1},{3,-1},{4,1},{5,-1},{6,1},{7,-1},{8,-1},{9,1},{10,-1},{11,1},{12,-1},{13,1}}},
        {kSqrt3, {{3,-1},{4,-kSqrt3},{5,-2},{6,-kSqrt3},{7,-1},{8,1},{9,kSqrt3},{10,2},{11,kSqrt3},{12,1}}},
        {kSqrt3, {{2,-1},{4,1},{5,kSqrt3},{6,2},{7,kSqrt3},{8,-kSqrt3},{9,-2},{10,-kSqrt3},{11,-1},{13,1}}},
        {-kSqrt3, {{3,-1},{4,kSqrt3},{5,-2},{6,kSqrt3},{7,-1},{8,1},{9,-kSqrt3},{10,2},{11,-kSqrt3},{12,1}}},
        {-kSqrt3, {{2,-1},{4,1},{5,-kSqrt3},{6,2},{7,-kSqrt3},{8,kSqrt3},{9,-2},{10,kSqrt3},{11,-1},{13,1}}},
    };
    return table;
}

void require_working_states(const SpacePtr& space) {
    for (const auto& s : single_excitation_basis()) {
        if (!space->contains(s)) {
            throw ValidationError("model: space is missing coupled state " + s.label());
        }
    }
}

Matrix cavity_part(const ModelParams& p, const SpacePtr& space) {
    const std::size_t dim = space->dimension();
    Matrix h = Matrix::Zero(dim, dim);
    for (int atom = 1; atom <= 3; ++atom) {
        for (CavityMode mode : {CavityMode::left, CavityMode::right}) {
            h += build_operator(CavityCoupling{atom, mode}, space).op.matrix;
        }
    }
    return p.coupling * (h + h.adjoint()).eval();
}

Matrix excited_projector(const SpacePtr& space) {
    const std::size_t dim = space->dimension();
    Matrix pe = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        int count = 0;
        for (Level l : space->state(j).levels) {
            if (l == Level::e) ++count;
        }
        pe(Eigen::Index(j), Eigen::Index(j)) = double(count);
    }
    return pe;
}

Matrix laser_raising(const SpacePtr& space, std::initializer_list<int> atoms) {
    const std::size_t dim = space->dimension();
    Matrix d = Matrix::Zero(dim, dim);
    for (int atom : atoms) {
        d += build_operator(AtomTransition{atom, Level::e, Level::g2}, space).op.matrix;
    }
    return d;
}

Matrix unit_matrix_entry(int dim, int row, int col) {
    Matrix m = Matrix::Zero(dim, dim);
    m(row, col) = 1.0;
    return m;
}

} // namespace

void ModelParams::validate() const {
    if (!(coupling > 0)) throw ValidationError("model params: coupling must be positive");
    if (delta < 0 || kappa < 0 || gamma < 0) {
        throw ValidationError("model params: rates and detuning must be nonnegative");
    }
}

TimeDependentHamiltonian::TimeDependentHamiltonian(SpacePtr space, Matrix constant,
                                                   std::vector<DriveTerm> terms,
                                                   std::vector<std::string> basis_labels)
    : space_(std::move(space)),
      constant_(std::move(constant)),
      terms_(std::move(terms)),
      basis_labels_(std::move(basis_labels)) {
    if (constant_.rows() != constant_.cols()) {
        throw ValidationError("hamiltonian: constant part must be square");
    }
    for (const auto& t : terms_) {
        if (t.op.rows() != constant_.rows() || t.op.cols() != constant_.cols()) {
            throw ValidationError("hamiltonian: drive term dimension mismatch");
        }
    }
}

Matrix TimeDependentHamiltonian::at(double t) const {
    Matrix h = constant_;
    for (const auto& term : terms_) {
        const Complex c = term.coefficient(t);
        h += c * term.op + std::conj(c) * term.op.adjoint();
    }
    return h;
}

TimeDependentHamiltonian hamiltonian_resonant(const ModelParams& p,
                                              const PulseSchedule& s,
                                              const SpacePtr& space) {
    p.validate();
    s.validate();
    require_working_states(space);
    std::vector<DriveTerm> terms;
    terms.push_back({[s](double t) { return Complex(envelopes(s, t).omega1, 0.0); },
                     laser_raising(space, {1})});
    terms.push_back({[s](double t) { return Complex(envelopes(s, t).omega3, 0.0); },
                     laser_raising(space, {2, 3})});
    return {space, cavity_part(p, space), std::move(terms)};
}

TimeDependentHamiltonian hamiltonian_apf(const ModelParams& p, const CddPulse& c,
                                         const SpacePtr& space) {
    p.validate();
    c.validate();
    require_working_states(space);
    Matrix constant = cavity_part(p, space) + p.delta * excited_projector(space);
    std::vector<DriveTerm> terms;
    terms.push_back({[c](double t) { return Complex(cdd_amplitude(c, t), 0.0); },
                     laser_raising(space, {1})});
    terms.push_back({[c](double t) { return Complex(0.0, cdd_amplitude(c, t) / kSqrt2); },
                     laser_raising(space, {2, 3})});
    return {space, std::move(constant), std::move(terms)};
}

std::vector<JumpOperator> jump_operators(const ModelParams& p, const SpacePtr& space) {
    p.validate();
    std::vector<JumpOperator> jumps;
    jumps.push_back({p.kappa, build_operator(CavityAnnihilation{CavityMode::left}, space).op});
    jumps.push_back({p.kappa, build_operator(CavityAnnihilation{CavityMode::right}, space).op});
    for (int atom = 1; atom <= 3; ++atom) {
        for (Level lower : {Level::g0, Level::g1, Level::g2}) {
            jumps.push_back(
                {p.gamma, build_operator(AtomTransition{atom, lower, Level::e}, space).op});
        }
    }
    return jumps;
}

std::vector<BasisState> initial_seeds() {
    const auto& basis = single_excitation_basis();
    return {basis[0], basis[13]};
}

SpecialStates special_states(const SpacePtr& space) {
    SpecialStates st{
        make_ket(space, {{1, -1}, {14, 1}}),
        make_ket(space, {{15, 1}, {16, -1}, {17, 1}, {18, -1}}),
        make_ket(space, {{1, -1}, {14, 1}}),
        make_ket(space, {{1, -1}, {14, 1}, {15, 1}, {16, -1}, {17, 1}, {18, -1}}),
        make_ket(space, {{1, -1}, {14, 1}, {15, -1}, {16, 1}, {17, -1}, {18, 1}}),
        {},
        {}};
    for (const auto& entry : coupled_sector_table()) {
        st.cavity_eigenstates.push_back(make_ket(space, entry.comps));
        st.cavity_eigenvalues.push_back(entry.value);
    }
    return st;
}

TimeDependentHamiltonian effective_zeno(const PulseSchedule& s) {
    s.validate();
    std::vector<DriveTerm> terms;
    terms.push_back({[s](double t) { return Complex(envelopes(s, t).omega1 / kSqrt3, 0.0); },
                     unit_matrix_entry(3, 1, 0)});
    terms.push_back({[s](double t) { return Complex(2.0 * envelopes(s, t).omega3 / std::sqrt(6.0), 0.0); },
                     unit_matrix_entry(3, 1, 2)});
    return {nullptr, Matrix::Zero(3, 3), std::move(terms), {"chi", "psi2", "varpi"}};
}

TimeDependentHamiltonian effective_nonresonant(const CddPulse& c) {
    c.validate();
    Matrix constant = Matrix::Zero(3, 3);
    constant(1, 1) = c.delta;
    std::vector<DriveTerm> terms;
    terms.push_back({[c](double t) { return Complex(cdd_amplitude(c, t) / kSqrt3, 0.0); },
                     unit_matrix_entry(3, 1, 0)});
    terms.push_back({[c](double t) { return Complex(0.0, cdd_amplitude(c, t) / kSqrt3); },
                     unit_matrix_entry(3, 1, 2)});
    return {nullptr, Matrix::Zero(3, 3) + constant, std::move(terms), {"chi", "psi2", "varpi"}};
}

TimeDependentHamiltonian effective_eliminated(const CddPulse& c) {
    c.schedule.validate();
    if (!(c.delta > 0)) throw ValidationError("effective_eliminated: elimination undefined");
    const double delta = c.delta;
    std::vector<DriveTerm> terms;
    terms.push_back({[c, delta](double t) {
                         const double g =
                             cdd_amplitude(c, t) * cdd_amplitude(c, t) / (3.0 * delta);
                         return Complex(0.0, -g);
                     },
                     unit_matrix_entry(2, 0, 1)});
    return {nullptr, Matrix::Zero(2, 2), std::move(terms), {"chi", "varpi"}};
}

TimeDependentHamiltonian cdd_hamiltonian(const PulseSchedule& s) {
    s.validate();
    std::vector<DriveTerm> terms;
    terms.push_back({[s](double t) { return Complex(0.0, theta_dot(s, t)); },
                     unit_matrix_entry(2, 0, 1)});
    return {nullptr, Matrix::Zero(2, 2), std::move(terms), {"chi", "varpi"}};
}

Matrix two_level_isometry(const SpacePtr& space) {
    const auto st = special_states(space);
    Matrix iso(Eigen::Index(space->dimension()), 2);
    iso.col(0) = st.chi.amplitudes;
    iso.col(1) = st.varpi.amplitudes;
    return iso;
}

Matrix three_level_isometry(const SpacePtr& space) {
    const auto st = special_states(space);
    Matrix iso(Eigen::Index(space->dimension()), 3);
    iso.col(0) = st.chi.amplitudes;
    iso.col(1) = st.cavity_eigenstates[1].amplitudes;
    iso.col(2) = st.varpi.amplitudes;
    return iso;
}

} // namespace tristap
