// Cyclic Jacobi diagonalization for dense complex Hermitian matrices.
// Every matrix in this project is small (<= 576), where Jacobi is both simple
// and numerically robust.
#include "tristap/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tristap {

namespace {

double offdiag_frobenius(const Matrix& a) {
    const Eigen::Index n = a.rows();
    double sum = 0.0;
    for (Eigen::Index q = 0; q < n; ++q)
        for (Eigen::Index p = 0; p < q; ++p) sum += std::norm(a(p, q));
    return std::sqrt(2.0 * sum);
}

} // namespace

EighResult eigh(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("eigh: matrix must be square");
    }
    const double defect = hermiticity_defect(m);
    if (!(defect <= 1e-12)) {
        std::ostringstream os;
        os << "eigh: matrix is not Hermitian (max asymmetry " << defect << ")";
        throw ValidationError(os.str());
    }

    const Eigen::Index n = m.rows();
    Matrix a = 0.5 * (m + m.adjoint()); // symmetrize roundoff
    Matrix v = Matrix::Identity(n, n);

    const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
    const double target = 1e-13 * a.norm();
    const int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps && offdiag_frobenius(a) > target; ++sweep) {
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300 * scale) continue;

                // phase transform making the pivot real, then a real rotation:
                // J = [[c, s], [-s*conj(ph), c*conj(ph)]] zeroes a(p,q) in J^H A J
                const Complex ph = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double zeta = (aqq - app) / (2.0 * mag);
                const double t =
                    (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(zeta, 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex cph = std::conj(ph);

                for (Eigen::Index r = 0; r < n; ++r) { // A <- A J, V <- V J
                    const Complex arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - s * cph * arq;
                    a(r, q) = s * arp + c * cph * arq;
                    const Complex vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp - s * cph * vrq;
                    v(r, q) = s * vrp + c * cph * vrq;
                }
                for (Eigen::Index r = 0; r < n; ++r) { // A <- J^H A
                    const Complex apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr - s * ph * aqr;
                    a(q, r) = s * apr + c * ph * aqr;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    EighResult out;
    out.eigenvalues.resize(n);
    std::vector<Eigen::Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](Eigen::Index i, Eigen::Index j) {
        return a(i, i).real() < a(j, j).real();
    });
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = a(perm[k], perm[k]).real();
        out.eigenvectors.col(k) = v.col(perm[k]);
    }
    return out;
}

} // namespace tristap
