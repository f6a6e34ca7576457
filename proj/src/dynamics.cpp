#include "tristap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tristap {

namespace {

struct Triplet {
    Eigen::Index r, c;
    Complex v;
};

std::vector<Triplet> to_triplets(const Matrix& m) {
    std::vector<Triplet> t;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (m(r, c) != Complex(0.0, 0.0)) t.push_back({r, c, m(r, c)});
        }
    }
    return t;
}

struct SparseOp {
    std::vector<Triplet> trip;

    void add_mul_vec(Complex s, const Vector& x, Vector& y) const {
        for (const auto& t : trip) y(t.r) += s * t.v * x(t.c);
    }
    // y += s * T * x
    void add_mul_left(Complex s, const Matrix& x, Matrix& y) const {
        for (const auto& t : trip) y.row(t.r) += s * t.v * x.row(t.c);
    }
    // y += s * x * T
    void add_mul_right(Complex s, const Matrix& x, Matrix& y) const {
        for (const auto& t : trip) y.col(t.c) += s * t.v * x.col(t.r);
    }
};

// Triplet-based application of H(t) = C + sum c_k A_k + conj(c_k) A_k^dagger.
// Every operator in this model is sparse, so this beats dense assembly at all
// the dimensions we touch (2..576 for kets, up to 256 for densities).
class HamiltonianApplier {
public:
    explicit HamiltonianApplier(const TimeDependentHamiltonian& h) {
        constant_.trip = to_triplets(h.constant_part());
        for (const auto& term : h.terms()) {
            terms_.push_back({term.coefficient,
                              SparseOp{to_triplets(term.op)},
                              SparseOp{to_triplets(term.op.adjoint())}});
        }
    }

    // y = H(t) x
    void mul_ket(double t, const Vector& x, Vector& y) const {
        y.setZero();
        constant_.add_mul_vec(1.0, x, y);
        for (const auto& term : terms_) {
            const Complex c = term.coeff(t);
            term.a.add_mul_vec(c, x, y);
            term.adag.add_mul_vec(std::conj(c), x, y);
        }
    }

    // out += i (rho H - H rho)
    void add_commutator(double t, const Matrix& rho, Matrix& out) const {
        const Complex i(0.0, 1.0);
        apply_both(constant_, 1.0, i, rho, out);
        for (const auto& term : terms_) {
            const Complex c = term.coeff(t);
            apply_both(term.a, c, i, rho, out);
            apply_both(term.adag, std::conj(c), i, rho, out);
        }
    }

private:
    struct Term {
        std::function<Complex(double)> coeff;
        SparseOp a, adag;
    };

    static void apply_both(const SparseOp& op, Complex scale, Complex i,
                           const Matrix& rho, Matrix& out) {
        op.add_mul_right(i * scale, rho, out);  //  i rho H
        op.add_mul_left(-i * scale, rho, out);  // -i H rho
    }

    SparseOp constant_;
    std::vector<Term> terms_;
};

std::vector<std::int64_t> sample_steps(std::int64_t steps, int max_samples) {
    const std::int64_t count = std::min<std::int64_t>(std::max(2, max_samples), steps + 1);
    std::vector<std::int64_t> idx;
    idx.reserve(std::size_t(count));
    std::int64_t prev = -1;
    for (std::int64_t i = 0; i < count; ++i) {
        const std::int64_t k = (i * steps) / (count - 1);
        if (k != prev) idx.push_back(k);
        prev = k;
    }
    return idx;
}

void check_finite(double value, std::int64_t step, const char* who) {
    if (!std::isfinite(value)) {
        std::ostringstream os;
        os << who << ": non-finite state at step " << step;
        throw NumericalError(os.str());
    }
}

} // namespace

void TimeGrid::validate() const {
    if (!(t_end > t_start)) throw ValidationError("time grid: t_end must exceed t_start");
    if (steps <= 0) throw ValidationError("time grid: steps must be positive");
}

std::int64_t default_steps(double tf) {
    return std::max<std::int64_t>(1000, std::llround(200.0 * tf));
}

RunResult propagate_state(const TimeDependentHamiltonian& h, const Ket& psi0,
                          const TimeGrid& grid, const StateSampler& sampler,
                          int max_samples) {
    if (h.space() && psi0.space && !(*h.space() == *psi0.space)) {
        throw ValidationError("propagate_state: state space mismatch");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-9) {
        throw ValidationError("propagate_state: initial state is not normalized");
    }
    return propagate_state(h, psi0.amplitudes, grid, sampler, max_samples);
}

RunResult propagate_state(const TimeDependentHamiltonian& h, const Vector& psi0,
                          const TimeGrid& grid, const StateSampler& sampler,
                          int max_samples) {
    grid.validate();
    if (std::size_t(psi0.size()) != h.dimension()) {
        throw ValidationError("propagate_state: dimension mismatch");
    }
    const HamiltonianApplier ap(h);
    const double dt = grid.dt();
    const Complex mi(0.0, -1.0);

    Vector psi = psi0;
    Vector k1(psi.size()), k2(psi.size()), k3(psi.size()), k4(psi.size()),
        work(psi.size()), hx(psi.size());

    RunResult res;
    res.grid = grid;
    res.dt_used = dt;
    const auto samples = sample_steps(grid.steps, max_samples);
    std::size_t si = 0;

    auto record = [&](std::int64_t n) {
        const double t = grid.t_start + double(n) * dt;
        const double norm = psi.norm();
        check_finite(norm, n, "propagate_state");
        if (sampler) {
            res.records.push_back(sampler(t, psi));
        } else {
            ObservableRow row;
            row.t = t;
            row.norm = norm;
            row.trace = norm * norm;
            res.records.push_back(row);
        }
    };

    for (std::int64_t n = 0; n < grid.steps; ++n) {
        if (si < samples.size() && samples[si] == n) {
            record(n);
            ++si;
        }
        const double t = grid.t_start + double(n) * dt;
        ap.mul_ket(t, psi, hx);
        k1 = mi * hx;
        work = psi + (0.5 * dt) * k1;
        ap.mul_ket(t + 0.5 * dt, work, hx);
        k2 = mi * hx;
        work = psi + (0.5 * dt) * k2;
        ap.mul_ket(t + 0.5 * dt, work, hx);
        k3 = mi * hx;
        work = psi + dt * k3;
        ap.mul_ket(t + dt, work, hx);
        k4 = mi * hx;
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    record(grid.steps);
    res.final_state = std::move(psi);
    return res;
}

RunResult propagate_density(const TimeDependentHamiltonian& h,
                            const std::vector<JumpOperator>& jumps,
                            const DensityMatrix& rho0, const TimeGrid& grid,
                            const DensitySampler& sampler, int max_samples) {
    if (h.space() && rho0.space && !(*h.space() == *rho0.space)) {
        throw ValidationError("propagate_density: state space mismatch");
    }
    if (hermiticity_defect(rho0.matrix) > 1e-10) {
        throw ValidationError("propagate_density: initial density matrix is not Hermitian");
    }
    if (std::abs(rho0.matrix.trace().real() - 1.0) > 1e-8) {
        throw ValidationError("propagate_density: initial trace differs from 1");
    }
    return propagate_density(h, jumps, rho0.matrix, grid, sampler, max_samples);
}

RunResult propagate_density(const TimeDependentHamiltonian& h,
                            const std::vector<JumpOperator>& jumps,
                            const Matrix& rho0, const TimeGrid& grid,
                            const DensitySampler& sampler, int max_samples) {
    grid.validate();
    const Eigen::Index dim = Eigen::Index(h.dimension());
    if (rho0.rows() != dim || rho0.cols() != dim) {
        throw ValidationError("propagate_density: dimension mismatch");
    }
    for (const auto& j : jumps) {
        if (j.rate < 0) throw ValidationError("propagate_density: negative jump rate");
        if (j.op.matrix.rows() != dim || j.op.matrix.cols() != dim) {
            throw ValidationError("propagate_density: jump operator dimension mismatch");
        }
    }

    const HamiltonianApplier ap(h);

    // K = sum (rate/2) L^dag L enters as -(K rho + rho K); the jump feed-in
    // rate L rho L^dag is applied per channel through a scratch buffer.
    Matrix kmat = Matrix::Zero(dim, dim);
    std::vector<SparseOp> lops, ldags;
    std::vector<double> rates;
    for (const auto& j : jumps) {
        if (j.rate == 0.0) continue;
        kmat += (0.5 * j.rate) * (j.op.matrix.adjoint() * j.op.matrix);
        lops.push_back({to_triplets(j.op.matrix)});
        ldags.push_back({to_triplets(j.op.matrix.adjoint())});
        rates.push_back(j.rate);
    }
    const SparseOp kop{to_triplets(kmat)};

    Matrix rho = rho0;
    Matrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim),
        work(dim, dim), scratch(dim, dim);

    auto rhs = [&](double t, const Matrix& r, Matrix& out) {
        out.setZero();
        ap.add_commutator(t, r, out);
        kop.add_mul_left(-1.0, r, out);
        kop.add_mul_right(-1.0, r, out);
        for (std::size_t j = 0; j < rates.size(); ++j) {
            scratch.setZero();
            lops[j].add_mul_left(1.0, r, scratch);          // L rho
            ldags[j].add_mul_right(rates[j], scratch, out); // rate (L rho) L^dag
        }
    };

    const double dt = grid.dt();
    RunResult res;
    res.grid = grid;
    res.dt_used = dt;
    res.is_density = true;
    const auto samples = sample_steps(grid.steps, max_samples);
    std::size_t si = 0;

    auto record = [&](std::int64_t n) {
        const double t = grid.t_start + double(n) * dt;
        const double tr = rho.trace().real();
        check_finite(tr, n, "propagate_density");
        if (sampler) {
            res.records.push_back(sampler(t, rho));
        } else {
            ObservableRow row;
            row.t = t;
            row.trace = tr;
            row.norm = rho.norm();
            res.records.push_back(row);
        }
    };

    for (std::int64_t n = 0; n < grid.steps; ++n) {
        if (si < samples.size() && samples[si] == n) {
            record(n);
            ++si;
        }
        const double t = grid.t_start + double(n) * dt;
        rhs(t, rho, k1);
        work = rho + (0.5 * dt) * k1;
        rhs(t + 0.5 * dt, work, k2);
        work = rho + (0.5 * dt) * k2;
        rhs(t + 0.5 * dt, work, k3);
        work = rho + dt * k3;
        rhs(t + dt, work, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    record(grid.steps);
    res.final_density = std::move(rho);
    return res;
}

double trace_distance(const Matrix& a, const Matrix& b) {
    const Matrix diff = 0.5 * ((a - b) + (a - b).adjoint());
    const auto eig = eigh(diff);
    return 0.5 * eig.eigenvalues.cwiseAbs().sum();
}

double final_state_distance(const RunResult& a, const RunResult& b) {
    if (a.is_density != b.is_density) {
        throw ValidationError("final_state_distance: mixed run kinds");
    }
    if (a.is_density) {
        return trace_distance(a.final_density, b.final_density);
    }
    const double na = a.final_state.norm();
    const double nb = b.final_state.norm();
    return 1.0 - std::abs(b.final_state.dot(a.final_state)) / (na * nb);
}

RunResult converge(const std::function<RunResult(std::int64_t)>& run,
                   std::int64_t initial_steps, double tol) {
    if (!(tol > 0)) throw ValidationError("converge: tolerance must be positive");
    if (initial_steps <= 0) throw ValidationError("converge: initial steps must be positive");

    RunResult coarse = run(initial_steps);
    std::int64_t steps = initial_steps;
    double last = std::numeric_limits<double>::quiet_NaN();
    while (true) {
        const std::int64_t next = steps * 2;
        if (next > kConvergeStepCap) {
            std::ostringstream os;
            os << "converge: step cap " << kConvergeStepCap
               << " reached without convergence (last estimate " << last << ")";
            throw NumericalError(os.str());
        }
        RunResult fine = run(next);
        const double dist = final_state_distance(coarse, fine);
        last = dist;
        if (dist <= tol) {
            fine.converged = true;
            fine.error_estimate = dist;
            return fine;
        }
        coarse = std::move(fine);
        steps = next;
    }
}

} // namespace tristap
