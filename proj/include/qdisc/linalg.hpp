#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qdisc/errors.hpp"

namespace qdisc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Spectral threshold used throughout for "numerically zero": well above
/// accumulated double rounding at d <= 16, well below any genuine gap.
inline constexpr double kDefaultRelTol = 1e-9;

/// Eigen data of a Hermitian matrix: M = V diag(values) V^dagger with the
/// values sorted descending and V unitary.
struct EigenDecomposition {
    RealVector values;
    ComplexMatrix vectors;
};

/// |M - M^dagger|_F / max(1, |M|_F).
double hermiticity_defect(const ComplexMatrix& m);

/// Diagonalize a Hermitian matrix. Throws NotHermitian when the input's
/// anti-Hermitian part exceeds 1e-9 relative, NoConvergence if the
/// underlying iteration fails.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

/// Number of eigenvalues with |lambda| > rel_tol * max(1, |lambda|_max).
int numerical_rank(const ComplexMatrix& m, double rel_tol = kDefaultRelTol);

/// Hermitian PSD square root A with A^dagger A = rho and the same numerical
/// rank as rho. Eigenvalues in [-rel_tol, 0) are clamped to zero; anything
/// below -rel_tol throws NotPSD.
ComplexMatrix psd_root(const ComplexMatrix& rho, double rel_tol = kDefaultRelTol);

/// Block-diagonal sum; off-blocks are exactly zero.
template <typename DerivedA, typename DerivedB>
ComplexMatrix direct_sum(const Eigen::MatrixBase<DerivedA>& a,
                         const Eigen::MatrixBase<DerivedB>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw DimensionMismatch("direct_sum: both blocks must be square");
    ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a.template cast<Complex>();
    out.bottomRightCorner(b.rows(), b.cols()) = b.template cast<Complex>();
    return out;
}

}  // namespace qdisc
