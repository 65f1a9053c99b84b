#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opbound/spectral.hpp"
#include "support.hpp"

using namespace opbound;
using namespace opbound::test;

TEST_CASE("scalar_power on the positive axis") {
    CHECK(std::abs(scalar_power(4.0, 0.5) - 2.0) < 1e-15);
    const Complex got = scalar_power(std::exp(1.0), Complex(1.0, 1.0));
    const Complex want = std::exp(1.0) * Complex(std::cos(1.0), std::sin(1.0));
    CHECK(std::abs(got - want) < 1e-14);
}

TEST_CASE("scalar_power branch on the negative axis") {
    // (-1)^i = e^{i(i pi)} = e^{-pi}
    CHECK(std::abs(scalar_power(-1.0, Complex(0, 1)) - 0.04321391826377224) < 1e-15);
    CHECK_THROWS_WITH_AS(scalar_power(0.0, 0.5), doctest::Contains("ZeroBase"), Error);

    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const double lam = -std::exp(rng.uniform(-3.0, 3.0));
        const Complex z(rng.uniform(0.0, 1.0), rng.uniform(-3.0, 3.0));
        const double want = std::pow(-lam, z.real()) * std::exp(-kPi * z.imag());
        CHECK(rel_err(std::abs(scalar_power(lam, z)), want) < 1e-12);
    }
}

TEST_CASE("power_selfadjoint examples") {
    Rng rng(41);
    const HermitianSpectrum eye = hermitian_eig(identity(3));
    CHECK(rel_err(power_selfadjoint(eye, Complex(0.3, -2.0)), identity(3)) < 1e-13);

    const HermitianSpectrum d14 = hermitian_eig(diag({1.0, 4.0}));
    CHECK(rel_err(power_selfadjoint(d14, 0.5), diag({1.0, 2.0})) < 1e-14);

    const HermitianSpectrum dm12 = hermitian_eig(diag({-1.0, 2.0}));
    const ComplexMatrix want =
        diag({scalar_power(-1.0, Complex(0, 1)), scalar_power(2.0, Complex(0, 1))});
    CHECK(rel_err(power_selfadjoint(dm12, Complex(0, 1)), want) < 1e-14);
}

TEST_CASE("power_selfadjoint rejects near-singular spectra") {
    const HermitianSpectrum s = hermitian_eig(diag({1e-12, 1.0}));
    CHECK_THROWS_WITH_AS(power_selfadjoint(s, 0.5), doctest::Contains("NearSingular"), Error);
}

TEST_CASE("group law on random hermitian matrices") {
    Rng rng(43);
    for (int t = 0; t < 30; ++t) {
        const Eigen::Index n = 2 + rng.integer(31);
        const HermitianSpectrum spec = hermitian_eig(gen_indefinite(rng, n));
        const Complex z1(rng.uniform(0.0, 1.0), rng.uniform(-1.0, 1.0));
        const Complex z2(rng.uniform(0.0, 1.0), rng.uniform(-1.0, 1.0));
        const ComplexMatrix lhs = power_selfadjoint(spec, z1) * power_selfadjoint(spec, z2);
        const ComplexMatrix rhs = power_selfadjoint(spec, z1 + z2);
        CHECK(rel_err(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("inverse consistency against solve") {
    Rng rng(47);
    for (int t = 0; t < 20; ++t) {
        const Eigen::Index n = 2 + rng.integer(15);
        const ComplexMatrix h = gen_posdef(rng, n);
        const HermitianSpectrum spec = hermitian_eig(h);
        CHECK(rel_err(power_selfadjoint(spec, -1.0), solve(h, identity(n))) < 1e-10);
    }
}

TEST_CASE("imaginary power bound, indefinite equality case") {
    // diag(-1, 1) at y = -1: the negative eigenvalue contributes e^{pi}
    const HermitianSpectrum s = hermitian_eig(diag({-1.0, 1.0}));
    const InequalityReport r = imaginary_power_bound_check(s, -1.0);
    CHECK(r.pass);
    CHECK(rel_err(r.lhs, std::exp(kPi)) < 1e-12);
    CHECK(rel_err(r.rhs, std::exp(kPi)) < 1e-12);

    // diag(-2, 5) at y = 1: moduli are {e^{-pi}, 1}, so the norm is 1
    const HermitianSpectrum s2 = hermitian_eig(diag({-2.0, 5.0}));
    const InequalityReport r2 = imaginary_power_bound_check(s2, 1.0);
    CHECK(r2.pass);
    CHECK(rel_err(r2.lhs, 1.0) < 1e-12);
}

TEST_CASE("imaginary power bound over random instances") {
    Rng rng(53);
    for (int t = 0; t < 300; ++t) {
        const Eigen::Index n = 2 + rng.integer(10);
        const double y = rng.uniform(-3.0, 3.0);

        const HermitianSpectrum indef = hermitian_eig(gen_indefinite(rng, n));
        const InequalityReport ri = imaginary_power_bound_check(indef, y);
        CHECK(ri.pass);
        // indefinite spectra attain the bound exactly (relative error; the
        // bound itself reaches e^{3 pi} over this y range)
        CHECK(rel_err(ri.lhs, std::max(1.0, std::exp(-kPi * y))) < 1e-11);

        const HermitianSpectrum pos = hermitian_eig(gen_posdef(rng, n));
        const ComplexMatrix tiy = power_selfadjoint(pos, Complex(0.0, y));
        CHECK(operator_norm(ComplexMatrix(tiy * tiy.adjoint() - identity(n))) <= 1e-11);
        CHECK(imaginary_power_bound_check(pos, y).pass);
    }
}

TEST_CASE("positive spectra give unitary imaginary powers") {
    const HermitianSpectrum s = hermitian_eig(diag({2.0, 3.0}));
    const InequalityReport r = imaginary_power_bound_check(s, 5.0);
    CHECK(r.theorem_id == "2.24");
    CHECK(r.pass);
    CHECK(rel_err(r.lhs, 1.0) < 1e-12);
}
