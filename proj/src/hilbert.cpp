#include "tristap/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace tristap {

const char* level_name(Level l) {
    switch (l) {
        case Level::g0: return "g0";
        case Level::g1: return "g1";
        case Level::g2: return "g2";
        case Level::e:  return "e";
    }
    return "?";
}

std::string BasisState::label() const {
    std::ostringstream os;
    os << "|" << level_name(levels[0]) << "," << level_name(levels[1]) << ","
       << level_name(levels[2]) << ";" << int(photons[0]) << int(photons[1]) << ">";
    return os.str();
}

StateSpace::StateSpace(std::vector<BasisState> states) : states_(std::move(states)) {
    index_.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) {
        auto [it, inserted] = index_.emplace(states_[i].key(), i);
        if (!inserted) {
            throw ValidationError("StateSpace: duplicate basis state " + states_[i].label());
        }
    }
}

std::optional<std::size_t> StateSpace::index_of(const BasisState& s) const {
    auto it = index_.find(s.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SpacePtr enumerate_full_space(int photon_cutoff) {
    if (photon_cutoff < 1 || photon_cutoff > 2) {
        throw ValidationError("enumerate_full_space: photon cutoff must be 1 or 2");
    }
    std::vector<BasisState> states;
    states.reserve(64 * (photon_cutoff + 1) * (photon_cutoff + 1));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int nl = 0; nl <= photon_cutoff; ++nl)
                    for (int nr = 0; nr <= photon_cutoff; ++nr) {
                        BasisState s;
                        s.levels = {Level(a), Level(b), Level(c)};
                        s.photons = {std::uint8_t(nl), std::uint8_t(nr)};
                        states.push_back(s);
                    }
    return std::make_shared<StateSpace>(std::move(states));
}

std::string spec_label(const OperatorSpec& spec) {
    if (const auto* t = std::get_if<AtomTransition>(&spec)) {
        std::ostringstream os;
        os << "|" << level_name(t->upper) << "><" << level_name(t->lower)
           << "|_" << t->atom;
        return os.str();
    }
    if (const auto* c = std::get_if<CavityCoupling>(&spec)) {
        std::ostringstream os;
        os << (c->mode == CavityMode::left ? "|e><g0|a_L" : "|e><g1|a_R")
           << "_" << c->atom;
        return os.str();
    }
    const auto& c = std::get<CavityAnnihilation>(spec);
    return c.mode == CavityMode::left ? "a_L" : "a_R";
}

namespace {

void validate_spec(const OperatorSpec& spec) {
    if (const auto* t = std::get_if<AtomTransition>(&spec)) {
        if (t->atom < 1 || t->atom > 3) {
            throw ValidationError("operator spec: atom index must be in 1..3");
        }
        if (t->upper == t->lower) {
            throw ValidationError("operator spec: transition must connect distinct levels");
        }
    } else if (const auto* c = std::get_if<CavityCoupling>(&spec)) {
        if (c->atom < 1 || c->atom > 3) {
            throw ValidationError("operator spec: atom index must be in 1..3");
        }
    }
}

// Image of |s> under the spec (or its adjoint): target state and amplitude.
// Returns false when the spec annihilates |s>.
bool apply_spec(const OperatorSpec& spec, bool adjoint, int photon_cutoff,
                const BasisState& s, BasisState& out, double& amp) {
    if (const auto* t = std::get_if<AtomTransition>(&spec)) {
        const Level from = adjoint ? t->upper : t->lower;
        const Level to   = adjoint ? t->lower : t->upper;
        if (s.levels[t->atom - 1] != from) return false;
        out = s;
        out.levels[t->atom - 1] = to;
        amp = 1.0;
        return true;
    }
    if (const auto* cc = std::get_if<CavityCoupling>(&spec)) {
        const int m = static_cast<int>(cc->mode);
        const Level g = cc->mode == CavityMode::left ? Level::g0 : Level::g1;
        const int n = s.photons[m];
        if (!adjoint) {
            if (s.levels[cc->atom - 1] != g || n == 0) return false;
            out = s;
            out.levels[cc->atom - 1] = Level::e;
            out.photons[m] = std::uint8_t(n - 1);
            amp = std::sqrt(double(n));
        } else {
            if (s.levels[cc->atom - 1] != Level::e || n >= photon_cutoff) return false;
            out = s;
            out.levels[cc->atom - 1] = g;
            out.photons[m] = std::uint8_t(n + 1);
            amp = std::sqrt(double(n + 1));
        }
        return true;
    }
    const auto& c = std::get<CavityAnnihilation>(spec);
    const int m = static_cast<int>(c.mode);
    const int n = s.photons[m];
    if (!adjoint) {
        if (n == 0) return false;
        out = s;
        out.photons[m] = std::uint8_t(n - 1);
        amp = std::sqrt(double(n));
    } else {
        if (n >= photon_cutoff) return false;
        out = s;
        out.photons[m] = std::uint8_t(n + 1);
        amp = std::sqrt(double(n + 1));
    }
    return true;
}

} // namespace

BuiltOperator build_operator(const OperatorSpec& spec, const SpacePtr& space,
                             int photon_cutoff) {
    if (!space) throw ValidationError("build_operator: null space");
    validate_spec(spec);
    const std::size_t dim = space->dimension();
    BuiltOperator result;
    result.op.space = space;
    result.op.matrix = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        BasisState image;
        double amp = 0.0;
        if (!apply_spec(spec, false, photon_cutoff, space->state(j), image, amp)) continue;
        if (auto i = space->index_of(image)) {
            result.op.matrix(Eigen::Index(*i), Eigen::Index(j)) = amp;
        } else {
            ++result.dropped_elements;
        }
    }
    return result;
}

SpacePtr closure_subspace(const std::vector<BasisState>& seeds,
                          const std::vector<ClosureGenerator>& generators,
                          int photon_cutoff) {
    if (seeds.empty()) throw ValidationError("closure_subspace: no seeds");
    for (const auto& g : generators) validate_spec(g.spec);

    std::vector<BasisState> order;
    std::set<BasisState> seen;
    for (const auto& s : seeds) {
        if (seen.insert(s).second) order.push_back(s);
    }
    std::size_t cursor = 0;
    while (cursor < order.size()) {
        const BasisState s = order[cursor++];
        std::set<BasisState> batch;
        for (const auto& g : generators) {
            BasisState image;
            double amp = 0.0;
            if (apply_spec(g.spec, false, photon_cutoff, s, image, amp) &&
                !seen.count(image)) {
                batch.insert(image);
            }
            if (g.with_adjoint &&
                apply_spec(g.spec, true, photon_cutoff, s, image, amp) &&
                !seen.count(image)) {
                batch.insert(image);
            }
        }
        for (const auto& t : batch) {   // std::set iterates lexicographically
            seen.insert(t);
            order.push_back(t);
        }
    }
    return std::make_shared<StateSpace>(std::move(order));
}

std::vector<ClosureGenerator> coupling_generators() {
    std::vector<ClosureGenerator> gens;
    for (int atom = 1; atom <= 3; ++atom) {
        gens.push_back({AtomTransition{atom, Level::e, Level::g2}, true});
        gens.push_back({CavityCoupling{atom, CavityMode::left}, true});
        gens.push_back({CavityCoupling{atom, CavityMode::right}, true});
    }
    return gens;
}

std::vector<ClosureGenerator> collapse_generators() {
    std::vector<ClosureGenerator> gens;
    gens.push_back({CavityAnnihilation{CavityMode::left}, false});
    gens.push_back({CavityAnnihilation{CavityMode::right}, false});
    for (int atom = 1; atom <= 3; ++atom) {
        for (Level p : {Level::g0, Level::g1, Level::g2}) {
            gens.push_back({AtomTransition{atom, p, Level::e}, false});
        }
    }
    return gens;
}

double hermiticity_defect(const Matrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

} // namespace tristap
