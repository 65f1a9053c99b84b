#pragma once

#include <Eigen/Dense>
#include <complex>

#include "opbound/error.hpp"

namespace opbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalue decomposition of a self-adjoint matrix: eigenvalues ascending,
/// eigenvector columns orthonormal.  reconstruct() = V diag(lambda) V*.
struct HermitianSpectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    Eigen::Index dim() const { return eigenvalues.size(); }
    ComplexMatrix reconstruct() const;
    /// max |eigenvalue| (the operator norm of the reconstructed matrix)
    double spectral_radius() const;
};

/// Thin SVD A = U diag(sigma) V*, singular values descending.
struct SingularDecomposition {
    ComplexMatrix u;
    RealVector singular_values;
    ComplexMatrix v;

    ComplexMatrix reconstruct() const;
};

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Eigendecomposition of a (numerically) Hermitian matrix.
/// Throws NotHermitian if ||A - A*|| > 1e-10 ||A||, NoConvergence on solver failure.
HermitianSpectrum hermitian_eig(const ComplexMatrix& a);

/// Thin singular value decomposition. Throws NoConvergence on solver failure.
SingularDecomposition svd(const ComplexMatrix& a);

/// Solves A X = B by LU with partial pivoting.
/// Throws Singular when a pivot falls below 1e-14 ||A||.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest singular value (the B(H) norm).
double operator_norm(const ComplexMatrix& a);

/// sigma_max / sigma_min; +inf when numerically singular.
double condition_estimate(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

/// A B^{-1} without forming B^{-1} explicitly (solves against B*).
ComplexMatrix multiply_inverse(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix identity(Eigen::Index n);

} // namespace opbound
