#include "qdisc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qdisc {

double hermiticity_defect(const ComplexMatrix& m) {
    return (m - m.adjoint()).norm() / std::max(1.0, m.norm());
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw NotHermitian("hermitian_eigen: matrix is not square");
    if (!m.allFinite())
        throw NotHermitian("hermitian_eigen: matrix has non-finite entries");
    if (hermiticity_defect(m) > 1e-9)
        throw NotHermitian("hermitian_eigen: anti-Hermitian part too large");

    // Symmetrize so rounding in the caller cannot leak into the solve.
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("hermitian_eigen: eigensolver did not converge");

    const Eigen::Index n = m.rows();
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen reports ascending order; flip to descending.
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values(i) = solver.eigenvalues()(n - 1 - i);
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

namespace {

int rank_from_values(const RealVector& values, double rel_tol) {
    const double lambda_max = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
    const double threshold = rel_tol * std::max(1.0, lambda_max);
    int rank = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (std::abs(values(i)) > threshold) ++rank;
    return rank;
}

}  // namespace

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw InvalidArgument("numerical_rank: rel_tol must lie in (0, 1)");
    return rank_from_values(hermitian_eigen(m).values, rel_tol);
}

ComplexMatrix psd_root(const ComplexMatrix& rho, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw InvalidArgument("psd_root: rel_tol must lie in (0, 1)");
    const EigenDecomposition eig = hermitian_eigen(rho);
    const double lambda_max = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
    const double threshold = rel_tol * std::max(1.0, lambda_max);

    RealVector roots = RealVector::Zero(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double v = eig.values(i);
        if (v < -rel_tol)
            throw NotPSD("psd_root: eigenvalue below -rel_tol");
        // Keep the rank identical to the input's: spectrum below the rank
        // threshold goes to zero instead of into the root.
        roots(i) = (v > threshold) ? std::sqrt(v) : 0.0;
    }
    return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace qdisc
