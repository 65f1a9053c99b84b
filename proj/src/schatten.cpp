#include "opbound/schatten.hpp"

#include <cmath>

namespace opbound {

double schatten_norm_of_singular_values(const RealVector& sigma, SchattenExponent p) {
    if (sigma.size() == 0)
        return 0.0;
    const double top = sigma.maxCoeff();
    if (p.is_infinite() || top == 0.0)
        return top;
    double sum = 0.0;
    for (Eigen::Index j = 0; j < sigma.size(); ++j)
        sum += std::pow(sigma(j) / top, p.p);
    return top * std::pow(sum, 1.0 / p.p);
}

double schatten_norm(const ComplexMatrix& a, SchattenExponent p) {
    if (p.is_infinite())
        return operator_norm(a);
    return schatten_norm_of_singular_values(svd(a).singular_values, p);
}

SchattenExponent conjugate_exponent(SchattenExponent p) {
    if (p.is_infinite())
        return SchattenExponent(1.0);
    if (p.p == 1.0)
        return SchattenExponent::infinity();
    return SchattenExponent(p.p / (p.p - 1.0));
}

SchattenExponent interpolation_exponent(SchattenExponent p0, SchattenExponent p1, Complex z) {
    const StripPoint sp(z);
    const double x = sp.z.real();
    const double inv0 = p0.is_infinite() ? 0.0 : 1.0 / p0.p;
    const double inv1 = p1.is_infinite() ? 0.0 : 1.0 / p1.p;
    const double inv = (1.0 - x) * inv0 + x * inv1;
    if (inv <= 0.0)
        return SchattenExponent::infinity();
    return SchattenExponent(1.0 / inv);
}

namespace {

// Duality-optimal singular value transform: with B = U Sigma V*, the witness
// F = V g(Sigma) U* has tr(B F) = sum sigma_j g_j; the Hoelder equality case
// picks g so that ||g||_{p'} = 1 and the sum equals ||sigma||_p.
RealVector optimal_transform(const RealVector& sigma, SchattenExponent p) {
    const Eigen::Index n = sigma.size();
    RealVector g = RealVector::Zero(n);
    const double top = sigma.maxCoeff();
    if (top == 0.0) {
        g(0) = 1.0; // any unit witness does for B = 0
        return g;
    }
    if (p.is_infinite()) {
        g(0) = 1.0; // sigma is sorted descending
        return g;
    }
    if (p.p == 1.0)
        return RealVector::Ones(n);
    const double norm_p = schatten_norm_of_singular_values(sigma, p);
    for (Eigen::Index j = 0; j < n; ++j)
        g(j) = std::pow(sigma(j) / norm_p, p.p - 1.0);
    return g;
}

} // namespace

TraceDualityEstimate trace_duality_estimate(const ComplexMatrix& b, SchattenExponent p,
                                            int trials, std::uint64_t seed) {
    if (b.rows() != b.cols())
        fail(errc::dimension_error, "trace_duality_estimate: B must be square");
    if (trials < 1)
        fail(errc::dimension_error, "trace_duality_estimate: trials >= 1 required");

    const SingularDecomposition dec = svd(b);
    const SchattenExponent q = conjugate_exponent(p);

    TraceDualityEstimate est;
    const RealVector g = optimal_transform(dec.singular_values, p);
    est.witness = dec.v * g.cast<Complex>().asDiagonal() * dec.u.adjoint();
    est.lower_bound = std::abs((b * est.witness).trace());

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ComplexMatrix f = random_matrix(rng, b.rows(), b.cols());
        const double fq = schatten_norm(f, q);
        if (fq == 0.0)
            continue;
        f /= fq;
        const double value = std::abs((b * f).trace());
        est.best_random = std::max(est.best_random, value);
    }
    est.lower_bound = std::max(est.lower_bound, est.best_random);
    return est;
}

std::vector<InequalityReport> verify_gk_interpolation(const StripFamily& family,
                                                      SchattenExponent p0, SchattenExponent p1,
                                                      double c0, double c1,
                                                      const std::vector<Complex>& grid) {
    if (!family.evaluator)
        fail(errc::dimension_error, "verify_gk_interpolation: empty evaluator");
    if (!(c0 > 0.0) || !(c1 > 0.0))
        fail(errc::nonpositive_bound, "boundary constants must be positive");

    // re-check the asserted boundary bounds on a sample of each line
    std::vector<double> heights = {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 4.0, -4.0};
    for (const Complex& z : grid)
        heights.push_back(z.imag());
    for (double y : heights) {
        const double n0 = schatten_norm(family.evaluator(Complex(0.0, y)), p0);
        if (n0 > c0 * (1.0 + 1e-9))
            fail(errc::boundary_violation,
                 "||A(i" + std::to_string(y) + ")|| = " + std::to_string(n0) + " exceeds C0");
        const double n1 = schatten_norm(family.evaluator(Complex(1.0, y)), p1);
        if (n1 > c1 * (1.0 + 1e-9))
            fail(errc::boundary_violation,
                 "||A(1+i" + std::to_string(y) + ")|| = " + std::to_string(n1) + " exceeds C1");
    }

    std::vector<InequalityReport> reports;
    reports.reserve(grid.size());
    for (const Complex& z : grid) {
        const StripPoint sp(z);
        const SchattenExponent pz = interpolation_exponent(p0, p1, z);
        const double lhs = schatten_norm(family.evaluator(z), pz);
        const double rhs = std::pow(c0, 1.0 - sp.z.real()) * std::pow(c1, sp.z.real());
        reports.push_back(make_report("3.4", z, lhs, rhs));
    }
    return reports;
}

} // namespace opbound
