// hilbert.hpp — basis enumeration, reachable subspaces, operator construction,
// and a dense complex Hermitian eigensolver.
//
// The system is three four-level atoms (ground levels g0, g1, g2 and excited
// level e) inside a two-mode cavity. Photon numbers are truncated at one per
// mode by default; a cutoff of two exists as a validation mode only.
#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tristap/errors.hpp"

namespace tristap {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;

enum class Level : std::uint8_t { g0 = 0, g1 = 1, g2 = 2, e = 3 };

const char* level_name(Level l);

// One product configuration: three atomic levels plus the two photon numbers
// (left mode first). Ordering is lexicographic in (atom1, atom2, atom3, nL, nR)
// with level order g0 < g1 < g2 < e.
struct BasisState {
    std::array<Level, 3> levels{Level::g0, Level::g0, Level::g0};
    std::array<std::uint8_t, 2> photons{0, 0};

    friend auto operator<=>(const BasisState&, const BasisState&) = default;

    // packed 10-bit key, unique for photon numbers <= 3
    std::uint32_t key() const {
        return (static_cast<std::uint32_t>(levels[0]) << 8) |
               (static_cast<std::uint32_t>(levels[1]) << 6) |
               (static_cast<std::uint32_t>(levels[2]) << 4) |
               (static_cast<std::uint32_t>(photons[0]) << 2) |
               static_cast<std::uint32_t>(photons[1]);
    }
    std::string label() const;
};

// Immutable ordered basis with an index map. All operators and kets are
// expressed relative to one StateSpace instance.
class StateSpace {
public:
    explicit StateSpace(std::vector<BasisState> states);

    std::size_t dimension() const { return states_.size(); }
    const std::vector<BasisState>& states() const { return states_; }
    const BasisState& state(std::size_t i) const { return states_[i]; }
    std::optional<std::size_t> index_of(const BasisState& s) const;
    bool contains(const BasisState& s) const { return index_of(s).has_value(); }

    bool operator==(const StateSpace& other) const { return states_ == other.states_; }

private:
    std::vector<BasisState> states_;
    std::unordered_map<std::uint32_t, std::size_t> index_;
};

using SpacePtr = std::shared_ptr<const StateSpace>;

// All 4^3 * (cutoff+1)^2 product states in lexicographic order.
SpacePtr enumerate_full_space(int photon_cutoff = 1);

// ---------------------------- operator specs --------------------------------

// |upper>_atom <lower| ; `atom` is 1-based (1..3)
struct AtomTransition {
    int atom = 1;
    Level upper = Level::e;
    Level lower = Level::g2;
};

enum class CavityMode : std::uint8_t { left = 0, right = 1 };

struct CavityAnnihilation {
    CavityMode mode = CavityMode::left;
};

// Composite cavity coupling |e>_atom <g0| a_L (left) or |e>_atom <g1| a_R
// (right): the atom absorbs one photon of its mode.
struct CavityCoupling {
    int atom = 1;
    CavityMode mode = CavityMode::left;
};

using OperatorSpec = std::variant<AtomTransition, CavityAnnihilation, CavityCoupling>;

std::string spec_label(const OperatorSpec& spec);

struct Operator {
    SpacePtr space;
    Matrix matrix;
};

struct Ket {
    SpacePtr space;
    Vector amplitudes;

    double norm() const { return amplitudes.norm(); }
};

// Matrix realization of a spec on a space. Transitions whose image lies outside
// the space are dropped; the count of dropped matrix elements is reported.
struct BuiltOperator {
    Operator op;
    std::size_t dropped_elements = 0;
};

BuiltOperator build_operator(const OperatorSpec& spec, const SpacePtr& space,
                             int photon_cutoff = 1);

// ------------------------------- closure ------------------------------------

// A closure generator applies a spec symbolically. Hermitian couplings walk
// both the spec and its adjoint; collapse operators are one-sided, which keeps
// the dissipative subspace minimal while remaining exact for the dynamics.
struct ClosureGenerator {
    OperatorSpec spec;
    bool with_adjoint = true;
};

// Breadth-first closure of the seeds. Order: seeds first (duplicates removed),
// then discovery order, lexicographic within each expansion batch.
SpacePtr closure_subspace(const std::vector<BasisState>& seeds,
                          const std::vector<ClosureGenerator>& generators,
                          int photon_cutoff = 1);

// the couplings of the interaction Hamiltonian (laser + both cavity modes)
std::vector<ClosureGenerator> coupling_generators();
// one-sided collapse generators: a_L, a_R and the nine atomic decay channels
std::vector<ClosureGenerator> collapse_generators();

// ------------------------------ eigensolver ---------------------------------

struct EighResult {
    Eigen::VectorXd eigenvalues; // ascending
    Matrix eigenvectors;         // orthonormal columns, matching order
};

// Cyclic complex Jacobi diagonalization. Converges when the off-diagonal
// Frobenius norm drops below 1e-13 * ||M||_F. Throws ValidationError (carrying
// the maximum asymmetry) when the input is not Hermitian within 1e-12.
EighResult eigh(const Matrix& m);

double hermiticity_defect(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = 1e-12);

} // namespace tristap
