import math

import numpy as np
import pytest

import opbound as ob


def herm(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (g + g.conj().T)


def posdef(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return g @ g.conj().T + 0.1 * np.eye(n)


def test_spectral_power_matches_numpy():
    t = np.diag([1.0, 4.0]).astype(complex)
    assert np.allclose(ob.power_selfadjoint(t, 0.5), np.diag([1.0, 2.0]))

    rng = np.random.default_rng(1)
    h = posdef(rng, 6)
    lam, v = np.linalg.eigh(h)
    want = (v * lam ** 0.3) @ v.conj().T
    assert np.allclose(ob.power_selfadjoint(h, 0.3), want, atol=1e-11)


def test_branch_convention_on_negative_axis():
    # (-1)^i = e^{-pi} under the +pi branch
    assert ob.scalar_power(-1.0, 1j) == pytest.approx(math.exp(-math.pi))
    t = np.diag([-1.0, 2.0]).astype(complex)
    tiy = ob.power_selfadjoint(t, 1j)
    assert abs(tiy[0, 0]) == pytest.approx(math.exp(-math.pi))


def test_schatten_norms_match_numpy():
    rng = np.random.default_rng(2)
    a = rng.normal(size=(7, 5)) + 1j * rng.normal(size=(7, 5))
    sigma = np.linalg.svd(a, compute_uv=False)
    assert ob.schatten_norm(a, 1) == pytest.approx(sigma.sum())
    assert ob.schatten_norm(a, 2) == pytest.approx(np.sqrt((sigma**2).sum()))
    assert ob.schatten_norm(a, math.inf) == pytest.approx(sigma[0])
    assert ob.operator_norm(a) == pytest.approx(sigma[0])


def test_generalized_polar_reconstructs():
    rng = np.random.default_rng(3)
    s = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    for alpha in (0.0, 0.25, 0.5, 1.0):
        gp = ob.generalized_polar(s, alpha)
        assert np.allclose(gp.left @ gp.isometry @ gp.right, s, atol=1e-10)


def test_strip_bound_report():
    rng = np.random.default_rng(4)
    s = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    t1, t2 = posdef(rng, 5), posdef(rng, 5)
    r = ob.verify_strip_bound(s, t1, t2, 0.5 + 1.0j, expected_case="both-positive")
    assert r.passed
    assert r.constant_factor == 1.0
    assert r.lhs <= r.rhs * (1 + 1e-9)

    with pytest.raises(ob.OpboundError, match="ModeMismatch"):
        ob.verify_strip_bound(s, t1, t2, 0.5, expected_case="neither-positive")


def test_dunford_against_scipy():
    scipy_linalg = pytest.importorskip("scipy.linalg")
    rng = np.random.default_rng(5)
    # bounded spectral range keeps the 128-node circle quadrature sharp
    lam = np.exp(rng.uniform(np.log(0.5), np.log(2.0), 5))
    q, _ = np.linalg.qr(rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5)))
    t = (q * lam) @ q.conj().T
    contour = ob.suggest_contour(t, 128)
    got = ob.dunford_power(t, 0.5, contour)
    want = scipy_linalg.fractional_matrix_power(t, -0.5)
    assert np.allclose(got, want, atol=1e-7)


def test_bip_and_mcintosh():
    phases = np.exp(1j * np.array([math.pi / 6, -math.pi / 6, 0.1]))
    t = np.diag(np.array([1.0, 2.0, 0.7]) * phases)
    fit = ob.bip_fit(t)
    assert fit.theta == pytest.approx(math.pi / 6, abs=1e-6)
    assert fit.N >= 1.0
    assert ob.mcintosh_check(t).passed


def test_trace_duality_attains_norm():
    rng = np.random.default_rng(6)
    b = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    for p in (1, 1.5, 2, math.inf):
        est = ob.trace_duality_estimate(b, p, trials=200, seed=9)
        assert est.lower_bound == pytest.approx(ob.schatten_norm(b, p), rel=1e-10)


def test_three_lines_and_optimize():
    assert ob.three_lines_bound(4.0, 9.0, 0.5) == pytest.approx(6.0)
    assert ob.three_lines_kernel_bound(lambda y: 1.0, lambda y: math.e, 0.5, 8.0) == \
        pytest.approx(math.sqrt(math.e), rel=1e-6)
    opt = ob.optimize_k(0.25, 4 * math.pi**2)
    assert opt.min_value == pytest.approx(2 * math.pi)


def test_io_roundtrip(tmp_path):
    rng = np.random.default_rng(7)
    a = rng.normal(size=(3, 4)) + 1j * rng.normal(size=(3, 4))
    mm = tmp_path / "a.mtx"
    js = tmp_path / "a.json"
    ob.save_matrix_market(a, str(mm))
    ob.save_matrix_json(a, str(js))
    assert np.array_equal(ob.load_matrix(str(mm)), a)
    assert np.array_equal(ob.load_matrix(str(js)), a)


def test_errors_carry_code_names():
    with pytest.raises(ob.OpboundError, match="NotHermitian"):
        ob.hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))
    with pytest.raises(ob.OpboundError, match="BadAlpha"):
        ob.generalized_polar(np.eye(2, dtype=complex), 2.0)
