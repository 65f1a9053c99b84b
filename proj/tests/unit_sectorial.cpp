#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opbound/sectorial.hpp"
#include "opbound/spectral.hpp"
#include "support.hpp"

using namespace opbound;
using namespace opbound::test;

TEST_CASE("sector membership") {
    const SectorialProfile ok = sector_membership(diag({1.0, 2.0}), Sector(0.1), 30, 1);
    CHECK(ok.omega_min_spectral == doctest::Approx(0.0));
    CHECK(ok.spectral_exact);
    for (const auto& [angle, sup] : ok.resolvent_sup_per_angle)
        CHECK(std::isfinite(sup));

    ComplexMatrix rotated(1, 1);
    rotated << std::polar(1.0, kPi / 3.0);
    CHECK_THROWS_WITH_AS(sector_membership(rotated, Sector(kPi / 4.0), 30, 1),
                         doctest::Contains("SpectrumOutsideSector"), Error);
}

TEST_CASE("scalar resolvent samples match |zeta| / |1 - zeta|") {
    const SectorialProfile profile = sector_membership(identity(1), Sector(0.2), 30, 1);
    for (const ResolventSample& sample : profile.resolvent_samples) {
        const double want = std::abs(sample.zeta) / std::abs(Complex(1.0, 0.0) - sample.zeta);
        CHECK(rel_err(sample.norm, want) < 1e-10);
    }
}

TEST_CASE("sectoriality angle") {
    Rng rng(113);
    CHECK(sectoriality_angle(gen_posdef(rng, 6)).omega == doctest::Approx(0.0));

    const ComplexMatrix t = diag({std::polar(1.0, kPi / 6.0), std::polar(1.0, -kPi / 6.0)});
    const SectorialAngle angle = sectoriality_angle(t);
    CHECK(angle.spectral_exact);
    CHECK(angle.omega == doctest::Approx(kPi / 6.0).epsilon(1e-12));

    const SectorialAngle nn = sectoriality_angle(mat2(1, 10, 0, 1));
    CHECK_FALSE(nn.spectral_exact);
    CHECK(nn.omega >= 0.0);

    CHECK_THROWS_WITH_AS(sectoriality_angle(diag({-1.0, 1.0})),
                         doctest::Contains("NegativeRealSpectrum"), Error);
}

TEST_CASE("dunford power examples") {
    // identity: the branch point at 0 sits at twice the radius, so 32 nodes
    // reach ~0.5^32 and 64 nodes the round-off floor
    const ComplexMatrix one32 = dunford_power(identity(3), Complex(0.7, 0.3),
                                              ContourSpec{1.0, 0.5, 32});
    CHECK(rel_err(one32, identity(3)) < 1e-9);
    const ComplexMatrix one64 = dunford_power(identity(3), Complex(0.7, 0.3),
                                              ContourSpec{1.0, 0.5, 64});
    CHECK(rel_err(one64, identity(3)) < 1e-12);

    // diag(1,4) at z = 1/2 on the contract contour
    const ComplexMatrix half =
        dunford_power(diag({1.0, 4.0}), 0.5, ContourSpec{2.5, 2.2, 128});
    CHECK(rel_err(half, diag({1.0, 0.5})) < 1e-8);

    // non-normal resolvent identity T^{-1}
    const ComplexMatrix t = mat2(2, 1, 0, 3);
    const ComplexMatrix inv = dunford_power(t, 1.0, suggest_contour(t, 128));
    CHECK(rel_err(inv, solve(t, identity(2))) < 1e-8);
}

TEST_CASE("dunford contour validation") {
    CHECK_THROWS_WITH_AS(dunford_power(diag({1.0, 4.0}), 0.5, ContourSpec{1.0, 1.5, 64}),
                         doctest::Contains("BranchCutCrossed"), Error);
    CHECK_THROWS_WITH_AS(dunford_power(diag({1.0, 4.0}), 0.5, ContourSpec{2.0, 1.0, 64}),
                         doctest::Contains("ContourTouchesSpectrum"), Error);
    CHECK_THROWS_WITH_AS(dunford_power(diag({1.0, 4.0}), Complex(0.0, 1.0),
                                       ContourSpec{2.5, 2.2, 64}),
                         doctest::Contains("BadStripPoint"), Error);
}

TEST_CASE("dunford agrees with spectral powers, geometric node convergence") {
    Rng rng(127);
    for (int t = 0; t < 20; ++t) {
        const Eigen::Index n = 2 + rng.integer(15);
        const ComplexMatrix h = gen_posdef_ranged(rng, n, 0.5, 2.0);
        const HermitianSpectrum spec = hermitian_eig(h);
        const ContourSpec c64 = suggest_contour(h, 64);
        const ContourSpec c128 = suggest_contour(h, 128);

        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const Complex z(0.1 + 0.9 * i / 4.0, -1.0 + 2.0 * j / 4.0);
                const ComplexMatrix want = power_selfadjoint(spec, -z);
                const double e64 = rel_err(dunford_power(h, z, c64), want);
                const double e128 = rel_err(dunford_power(h, z, c128), want);
                CHECK(e128 <= 1e-8);
                CHECK((e64 <= 1e-12 || e64 / std::max(e128, 1e-300) >= 10.0));
            }
    }
}

TEST_CASE("imaginary power examples") {
    CHECK(rel_err(imaginary_power(identity(3), 0.7), identity(3)) < 1e-9);
    CHECK(rel_err(imaginary_power(identity(3), 0.0), identity(3)) == 0.0);

    ComplexMatrix four(1, 1);
    four << 4.0;
    const Complex got = imaginary_power(four, 1.0)(0, 0);
    CHECK(std::abs(got - Complex(std::cos(std::log(4.0)), std::sin(std::log(4.0)))) < 1e-9);

    ComplexMatrix rot(1, 1);
    rot << std::polar(1.0, kPi / 4.0);
    CHECK(rel_err(std::abs(imaginary_power(rot, 1.0)(0, 0)), std::exp(-kPi / 4.0)) < 1e-7);

    CHECK_THROWS_WITH_AS(imaginary_power(diag({-1.0, 2.0}), 1.0),
                         doctest::Contains("NegativeRealSpectrum"), Error);
}

TEST_CASE("imaginary power matches the eigen-calculus on normal matrices") {
    Rng rng(131);
    for (int t = 0; t < 10; ++t) {
        const Eigen::Index n = 2 + rng.integer(7);
        const ComplexMatrix m = gen_sectorial_normal(rng, n, kPi / 3.0);
        const double s = rng.uniform(-3.0, 3.0);
        CHECK(rel_err(imaginary_power(m, s), normal_power(m, Complex(0.0, s))) < 1e-7);
    }
}

TEST_CASE("imaginary power adjoint symmetry and group law") {
    Rng rng(137);
    for (int t = 0; t < 6; ++t) {
        const Eigen::Index n = 2 + rng.integer(5);
        const ComplexMatrix m = gen_sectorial_normal(rng, n, kPi / 4.0);
        const double s1 = rng.uniform(-2.0, 2.0);
        const double s2 = rng.uniform(-2.0, 2.0);
        // (T^z)* = (T*)^{z bar}
        CHECK(rel_err(imaginary_power(adjoint(m), s1),
                      adjoint(imaginary_power(m, -s1))) < 1e-7);
        CHECK(rel_err(ComplexMatrix(imaginary_power(m, s1) * imaginary_power(m, s2)),
                      imaginary_power(m, s1 + s2)) < 1e-6);
    }
}

TEST_CASE("bip fit") {
    Rng rng(139);
    const BipEstimate pos = bip_fit(gen_posdef(rng, 6), 3.0, 13);
    CHECK(pos.theta == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(pos.n_constant == doctest::Approx(1.0));

    const ComplexMatrix t = diag({std::polar(1.0, kPi / 4.0), std::polar(1.0, -kPi / 4.0)});
    const BipEstimate rot = bip_fit(t, 3.0, 13);
    CHECK(std::abs(rot.theta - kPi / 4.0) < 1e-6);

    const BipEstimate plain = bip_fit(diag({1.0, 2.0}), 3.0, 13);
    CHECK(plain.theta == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(plain.n_constant == doctest::Approx(1.0));

    // fitted envelope dominates every sample
    for (const auto& [s, norm] : rot.sample_points)
        CHECK(norm <= rot.n_constant * std::exp(rot.theta * std::abs(s)) * (1.0 + 1e-9));
}

TEST_CASE("bip fit is adjoint invariant") {
    Rng rng(149);
    for (int t = 0; t < 10; ++t) {
        const ComplexMatrix m = gen_sectorial_normal(rng, 2 + rng.integer(7), kPi / 3.0);
        const BipEstimate a = bip_fit(m, 3.0, 13);
        const BipEstimate b = bip_fit(adjoint(m), 3.0, 13);
        CHECK(std::abs(a.theta - b.theta) < 1e-6);
        CHECK(std::abs(a.n_constant - b.n_constant) < 1e-6);
    }
}

TEST_CASE("mcintosh identity") {
    InequalityReport r = mcintosh_check(diag({1.0, 3.0}));
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(0.0).epsilon(1e-9));

    const ComplexMatrix t = diag({std::polar(1.0, kPi / 6.0), std::polar(2.0, -kPi / 6.0)});
    r = mcintosh_check(t);
    CHECK(r.pass);

    CHECK_THROWS_WITH_AS(mcintosh_check(mat2(1, 5, 0, 1)), doctest::Contains("NotNormal"),
                         Error);
}
