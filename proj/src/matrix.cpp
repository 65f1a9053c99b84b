#include "opbound/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace opbound {

namespace {

void require_nonempty(const ComplexMatrix& a, const char* who) {
    if (a.rows() < 1 || a.cols() < 1)
        fail(errc::dimension_error, std::string(who) + ": empty matrix");
    if (!all_finite(a))
        fail(errc::dimension_error, std::string(who) + ": non-finite entries");
}

void require_square(const ComplexMatrix& a, const char* who) {
    require_nonempty(a, who);
    if (a.rows() != a.cols())
        fail(errc::dimension_error, std::string(who) + ": matrix must be square");
}

// Jacobi is more accurate on generic small operands; BDC wins above that.
RealVector singular_values_of(const ComplexMatrix& a) {
    if (std::min(a.rows(), a.cols()) <= 32) {
        Eigen::JacobiSVD<ComplexMatrix> s(a);
        return s.singularValues();
    }
    Eigen::BDCSVD<ComplexMatrix> s(a);
    return s.singularValues();
}

} // namespace

ComplexMatrix HermitianSpectrum::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

double HermitianSpectrum::spectral_radius() const {
    return eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
}

ComplexMatrix SingularDecomposition::reconstruct() const {
    return u * singular_values.cast<Complex>().asDiagonal() * v.adjoint();
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    require_nonempty(a, "adjoint");
    return a.adjoint();
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& a) {
    require_square(a, "hermitian_eig");
    const double scale = frobenius_norm(a);
    const double defect = frobenius_norm(ComplexMatrix(a - a.adjoint()));
    if (defect > 1e-10 * std::max(scale, 1e-300))
        fail(errc::not_hermitian, "symmetry defect " + std::to_string(defect));

    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
    if (es.info() != Eigen::Success)
        fail(errc::no_convergence, "self-adjoint eigensolver did not converge");
    return HermitianSpectrum{es.eigenvalues(), es.eigenvectors()};
}

SingularDecomposition svd(const ComplexMatrix& a) {
    require_nonempty(a, "svd");
    if (std::min(a.rows(), a.cols()) <= 32) {
        Eigen::JacobiSVD<ComplexMatrix> s(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        if (s.info() != Eigen::Success)
            fail(errc::no_convergence, "Jacobi SVD did not converge");
        return SingularDecomposition{s.matrixU(), s.singularValues(), s.matrixV()};
    }
    Eigen::BDCSVD<ComplexMatrix> s(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (s.info() != Eigen::Success)
        fail(errc::no_convergence, "BDC SVD did not converge");
    return SingularDecomposition{s.matrixU(), s.singularValues(), s.matrixV()};
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "solve");
    require_nonempty(b, "solve");
    if (b.rows() != a.rows())
        fail(errc::dimension_error, "solve: row count of B must match A");

    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    const double floor = 1e-14 * std::max(frobenius_norm(a), 1e-300);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (min_pivot < floor)
        fail(errc::singular, "pivot " + std::to_string(min_pivot) + " below threshold");
    return lu.solve(b);
}

double operator_norm(const ComplexMatrix& a) {
    require_nonempty(a, "operator_norm");
    if (a.rows() == 1 || a.cols() == 1)
        return a.norm();
    return singular_values_of(a)(0);
}

double condition_estimate(const ComplexMatrix& a) {
    require_square(a, "condition_estimate");
    const RealVector s = singular_values_of(a);
    const double smin = s(s.size() - 1);
    if (smin <= 0.0)
        return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

bool all_finite(const ComplexMatrix& a) {
    return a.allFinite();
}

double frobenius_norm(const ComplexMatrix& a) {
    return a.norm();
}

ComplexMatrix multiply_inverse(const ComplexMatrix& a, const ComplexMatrix& b) {
    // a b^{-1} = (b^{-*} a^*)^*
    return solve(b.adjoint(), a.adjoint()).adjoint();
}

ComplexMatrix identity(Eigen::Index n) {
    return ComplexMatrix::Identity(n, n);
}

} // namespace opbound
