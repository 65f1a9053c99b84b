#include "opbound/generators.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace opbound {

MatrixClass matrix_class_from_name(const std::string& name) {
    if (name == "hermitian") return MatrixClass::hermitian;
    if (name == "posdef") return MatrixClass::posdef;
    if (name == "indefinite") return MatrixClass::indefinite;
    if (name == "sectorial-normal") return MatrixClass::sectorial_normal;
    if (name == "random") return MatrixClass::random;
    fail(errc::parse_error, "unknown matrix class '" + name + "'");
}

std::string matrix_class_name(MatrixClass cls) {
    switch (cls) {
    case MatrixClass::hermitian: return "hermitian";
    case MatrixClass::posdef: return "posdef";
    case MatrixClass::indefinite: return "indefinite";
    case MatrixClass::sectorial_normal: return "sectorial-normal";
    case MatrixClass::random: return "random";
    }
    return "?";
}

ComplexMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            g(i, j) = rng.cnormal();
    return g;
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double m = std::abs(d);
        q.col(j) *= m > 0.0 ? d / m : Complex(1.0, 0.0);
    }
    return q;
}

ComplexMatrix gen_hermitian(Rng& rng, Eigen::Index n) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix gen_posdef(Rng& rng, Eigen::Index n) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    return g * g.adjoint() + 0.1 * identity(n);
}

ComplexMatrix gen_indefinite(Rng& rng, Eigen::Index n) {
    HermitianSpectrum spec = hermitian_eig(gen_hermitian(rng, n));
    RealVector lam = spec.eigenvalues;
    // centre so that both signs occur, then push everything out of (-0.1, 0.1)
    if (n > 1) {
        const double mid = 0.5 * (lam(0) + lam(n - 1));
        lam.array() -= mid;
    }
    if (lam.maxCoeff() <= 0.0) lam(n - 1) = 0.05;
    if (lam.minCoeff() >= 0.0) lam(0) = -0.05;
    for (Eigen::Index j = 0; j < n; ++j)
        lam(j) += lam(j) >= 0.0 ? 0.1 : -0.1;
    return spec.eigenvectors * lam.cast<Complex>().asDiagonal() * spec.eigenvectors.adjoint();
}

ComplexMatrix gen_sectorial_normal(Rng& rng, Eigen::Index n, double omega) {
    if (!(omega >= 0.0 && omega < 3.14159265358979323846))
        fail(errc::bad_strip_point, "sector half-angle must lie in [0, pi)");
    ComplexVector lam(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double r = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
        const double phi = omega > 0.0 ? rng.uniform(-omega, omega) : 0.0;
        lam(j) = std::polar(r, phi);
    }
    const ComplexMatrix u = random_unitary(rng, n);
    return u * lam.asDiagonal() * u.adjoint();
}

ComplexMatrix gen_posdef_ranged(Rng& rng, Eigen::Index n, double r_min, double r_max) {
    ComplexVector lam(n);
    for (Eigen::Index j = 0; j < n; ++j)
        lam(j) = std::exp(rng.uniform(std::log(r_min), std::log(r_max)));
    const ComplexMatrix u = random_unitary(rng, n);
    return u * lam.asDiagonal() * u.adjoint();
}

ComplexMatrix generate(MatrixClass cls, Rng& rng, Eigen::Index n, double omega_config) {
    switch (cls) {
    case MatrixClass::hermitian: return gen_hermitian(rng, n);
    case MatrixClass::posdef: return gen_posdef(rng, n);
    case MatrixClass::indefinite: return gen_indefinite(rng, n);
    case MatrixClass::sectorial_normal: return gen_sectorial_normal(rng, n, omega_config);
    case MatrixClass::random: return random_matrix(rng, n, n);
    }
    fail(errc::unknown_case, "generate");
}

} // namespace opbound
