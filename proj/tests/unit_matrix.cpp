#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opbound/matrix.hpp"
#include "support.hpp"

using namespace opbound;
using namespace opbound::test;

TEST_CASE("adjoint basics") {
    ComplexMatrix one(1, 1);
    one << Complex(0, 1);
    CHECK(adjoint(one)(0, 0) == Complex(0, -1));

    const ComplexMatrix eye = identity(4);
    CHECK(rel_err(adjoint(eye), eye) == 0.0);

    // (AB)* = B* A*
    const ComplexMatrix a = mat2(0, 1, 0, 0);
    const ComplexMatrix b = mat2(1, 0, 0, 2);
    CHECK(rel_err(adjoint(ComplexMatrix(a * b)), ComplexMatrix(adjoint(b) * adjoint(a))) < 1e-13);
}

TEST_CASE("adjoint is an involution") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix a = random_matrix(rng, 5, 3);
        CHECK(rel_err(adjoint(adjoint(a)), a) == 0.0);
    }
}

TEST_CASE("hermitian_eig examples") {
    HermitianSpectrum s = hermitian_eig(diag({3.0, 1.0}));
    CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(3.0));

    s = hermitian_eig(mat2(0, 1, 1, 0));
    CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0));

    s = hermitian_eig(identity(5));
    for (int j = 0; j < 5; ++j)
        CHECK(s.eigenvalues(j) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig rejects non-hermitian input") {
    CHECK_THROWS_WITH_AS(hermitian_eig(mat2(0, 1, 0, 0)), doctest::Contains("NotHermitian"),
                         Error);
}

TEST_CASE("hermitian_eig reconstruction and orthonormality") {
    Rng rng(7);
    for (int t = 0; t < 25; ++t) {
        const Eigen::Index n = 2 + rng.integer(30);
        const ComplexMatrix h = gen_hermitian(rng, n);
        const HermitianSpectrum s = hermitian_eig(h);
        CHECK(rel_err(s.reconstruct(), h) < 1e-12);
        CHECK(operator_norm(ComplexMatrix(s.eigenvectors.adjoint() * s.eigenvectors -
                                          identity(n))) < 1e-12);
    }
}

TEST_CASE("svd examples") {
    SingularDecomposition d = svd(diag({3.0, -4.0}));
    CHECK(d.singular_values(0) == doctest::Approx(4.0));
    CHECK(d.singular_values(1) == doctest::Approx(3.0));

    d = svd(ComplexMatrix::Zero(3, 3));
    CHECK(d.singular_values.maxCoeff() == 0.0);

    d = svd(mat2(0, 2, 0, 0));
    CHECK(d.singular_values(0) == doctest::Approx(2.0));
    CHECK(d.singular_values(1) == doctest::Approx(0.0));
}

TEST_CASE("svd reconstructs random matrices") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        const Eigen::Index rows = 1 + rng.integer(40);
        const Eigen::Index cols = 1 + rng.integer(40);
        const ComplexMatrix a = random_matrix(rng, rows, cols);
        const SingularDecomposition d = svd(a);
        CHECK(frobenius_norm(ComplexMatrix(d.reconstruct() - a)) <=
              1e-12 * std::max(1.0, frobenius_norm(a)));
        for (Eigen::Index j = 1; j < d.singular_values.size(); ++j)
            CHECK(d.singular_values(j - 1) >= d.singular_values(j));
    }
}

TEST_CASE("solve examples") {
    Rng rng(3);
    const ComplexMatrix b = random_matrix(rng, 4, 2);
    CHECK(rel_err(solve(identity(4), b), b) < 1e-14);

    const ComplexMatrix x = solve(diag({2.0, 4.0}), identity(2));
    CHECK(rel_err(x, diag({0.5, 0.25})) < 1e-14);

    ComplexMatrix rhs(2, 1);
    rhs << 2.0, 1.0;
    const ComplexMatrix y = solve(mat2(1, 1, 0, 1), rhs);
    CHECK(std::abs(y(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(y(1, 0) - 1.0) < 1e-14);
}

TEST_CASE("solve reports singular systems") {
    const ComplexMatrix a = mat2(1, 1, 1, 1);
    CHECK_THROWS_WITH_AS(solve(a, identity(2)), doctest::Contains("Singular"), Error);
}

TEST_CASE("solve residual on well conditioned instances") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const Eigen::Index n = 2 + rng.integer(63);
        const ComplexMatrix a = gen_posdef(rng, n); // condition far below 1e6
        const ComplexMatrix b = random_matrix(rng, n, 3);
        const ComplexMatrix x = solve(a, b);
        CHECK(frobenius_norm(ComplexMatrix(a * x - b)) <= 1e-10 * frobenius_norm(b));
    }
}

TEST_CASE("operator_norm examples") {
    CHECK(operator_norm(diag({1.0, -5.0})) == doctest::Approx(5.0));

    Rng rng(5);
    CHECK(operator_norm(random_unitary(rng, 4)) == doctest::Approx(1.0));
    CHECK(operator_norm(mat2(0, 3, 0, 0)) == doctest::Approx(3.0));
}

TEST_CASE("operator_norm equals spectral radius for hermitian input") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix h = gen_hermitian(rng, 2 + rng.integer(20));
        const HermitianSpectrum s = hermitian_eig(h);
        CHECK(rel_err(operator_norm(h), s.spectral_radius()) < 1e-12);
    }
}
