#include "opbound/polar.hpp"

#include <cmath>

namespace opbound {

namespace {

constexpr double kRankFloor = 1e-12; // sigma below kRankFloor * sigma_max is treated as 0

Eigen::Index numerical_rank(const RealVector& sigma) {
    if (sigma.size() == 0)
        return 0;
    const double floor = kRankFloor * sigma(0);
    Eigen::Index r = 0;
    while (r < sigma.size() && sigma(r) > floor)
        ++r;
    return r;
}

// |S*|^p and |S|^p straight from the SVD factors (sigma >= 0 already).
ComplexMatrix left_abs_power(const SingularDecomposition& dec, double p) {
    RealVector s = dec.singular_values;
    for (Eigen::Index j = 0; j < s.size(); ++j)
        s(j) = s(j) > 0.0 ? std::pow(s(j), p) : 0.0;
    return dec.u * s.cast<Complex>().asDiagonal() * dec.u.adjoint();
}

ComplexMatrix right_abs_power(const SingularDecomposition& dec, double p) {
    RealVector s = dec.singular_values;
    for (Eigen::Index j = 0; j < s.size(); ++j)
        s(j) = s(j) > 0.0 ? std::pow(s(j), p) : 0.0;
    return dec.v * s.cast<Complex>().asDiagonal() * dec.v.adjoint();
}

} // namespace

ComplexMatrix psd_power(const ComplexMatrix& h, double p) {
    HermitianSpectrum spec = hermitian_eig(h);
    const double top = spec.spectral_radius();
    ComplexVector powered(spec.dim());
    for (Eigen::Index j = 0; j < spec.dim(); ++j) {
        double lam = std::max(spec.eigenvalues(j), 0.0);
        if (lam == 0.0 && p < 0.0)
            fail(errc::near_singular, "negative power of a singular PSD matrix");
        if (lam < 1e-14 * top)
            lam = 0.0;
        powered(j) = lam > 0.0 ? std::pow(lam, p) : 0.0;
        if (lam == 0.0 && p == 0.0)
            powered(j) = 1.0; // H^0 = I convention
    }
    return spec.eigenvectors * powered.asDiagonal() * spec.eigenvectors.adjoint();
}

PolarDecomposition polar(const ComplexMatrix& s) {
    if (s.rows() != s.cols())
        fail(errc::dimension_error, "polar: S must be square");
    const SingularDecomposition dec = svd(s);
    const Eigen::Index r = numerical_rank(dec.singular_values);

    PolarDecomposition out;
    out.abs = dec.v * dec.singular_values.cast<Complex>().asDiagonal() * dec.v.adjoint();
    out.isometry = ComplexMatrix::Zero(s.rows(), s.cols());
    if (r > 0)
        out.isometry = dec.u.leftCols(r) * dec.v.leftCols(r).adjoint();
    return out;
}

GeneralizedPolarFactors generalized_polar(const ComplexMatrix& s, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        fail(errc::bad_alpha, "alpha must lie in [0,1]");
    if (s.rows() != s.cols())
        fail(errc::dimension_error, "generalized_polar: S must be square");

    const SingularDecomposition dec = svd(s);
    const Eigen::Index r = numerical_rank(dec.singular_values);

    GeneralizedPolarFactors out;
    out.alpha = alpha;
    out.left = alpha == 0.0 ? identity(s.rows()) : left_abs_power(dec, alpha);
    out.right = alpha == 1.0 ? identity(s.rows()) : right_abs_power(dec, 1.0 - alpha);
    out.isometry = ComplexMatrix::Zero(s.rows(), s.cols());
    if (r > 0)
        out.isometry = dec.u.leftCols(r) * dec.v.leftCols(r).adjoint();
    return out;
}

std::pair<double, double> relative_bound_constants(const ComplexMatrix& s, const ComplexMatrix& t) {
    if (t.rows() != t.cols())
        fail(errc::dimension_error, "relative_bound_constants: T must be square");
    if (s.cols() != t.rows())
        fail(errc::dimension_error, "relative_bound_constants: S columns must match dim(T)");
    const double a = operator_norm(multiply_inverse(s, t));
    return {a, 0.0};
}

InequalityReport heinz_domination_check(const ComplexMatrix& s, const ComplexMatrix& t, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        fail(errc::bad_alpha, "alpha must lie in [0,1]");

    const auto [a, b] = relative_bound_constants(s, t);
    (void)b;
    const double a_star = operator_norm(multiply_inverse(s.adjoint(), t.adjoint()));

    double lhs_s = alpha == 0.0 ? 1.0 : 0.0;
    if (alpha > 0.0 && a > 0.0) {
        const SingularDecomposition dec = svd(s);
        const ComplexMatrix abs_s_alpha =
            dec.v * dec.singular_values.array().pow(alpha).matrix().cast<Complex>().asDiagonal() *
            dec.v.adjoint();
        const ComplexMatrix dominator = psd_power(a * a * (t.adjoint() * t), -0.5 * alpha);
        lhs_s = operator_norm(abs_s_alpha * dominator);
    }

    double lhs_s_star = alpha == 0.0 ? 1.0 : 0.0;
    if (alpha > 0.0 && a_star > 0.0) {
        const SingularDecomposition dec = svd(s);
        const ComplexMatrix abs_sstar_alpha =
            dec.u * dec.singular_values.array().pow(alpha).matrix().cast<Complex>().asDiagonal() *
            dec.u.adjoint();
        const ComplexMatrix dominator = psd_power(a_star * a_star * (t * t.adjoint()), -0.5 * alpha);
        lhs_s_star = operator_norm(abs_sstar_alpha * dominator);
    }

    return make_report("2.48", Complex(alpha, 0.0), std::max(lhs_s, lhs_s_star), 1.0);
}

} // namespace opbound
