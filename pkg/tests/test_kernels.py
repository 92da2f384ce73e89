import numpy as np
import pytest

from minpolydiag import _kernels, _pykernels


def test_backend_reported():
    assert _kernels.BACKEND in {"python", "cython"}


def test_mgs_finds_first_dependence(kernels):
    u = np.array([[1, 0, 0], [0, 1, 0], [2, 3, 0], [0, 0, 1]], dtype=complex)
    k, d, res = kernels.mgs_dependence(u, 1e-12)
    assert k == 2
    np.testing.assert_allclose(d, [2, 3], atol=1e-14)
    assert len(res) == 3 and res[2] <= 1e-12


def test_mgs_all_independent(kernels):
    k, d, res = kernels.mgs_dependence(np.eye(3, dtype=complex), 1e-12)
    assert k == 3 and d is None
    np.testing.assert_allclose(res, 1)


def test_mgs_backends_agree(kernels, rng):
    u = rng.standard_normal((5, 9)) + 1j * rng.standard_normal((5, 9))
    u[4] = 0.3 * u[0] - (2 + 1j) * u[2] + 1j * u[3]
    k1, d1, r1 = kernels.mgs_dependence(u, 1e-9)
    k2, d2, r2 = _pykernels.mgs_dependence(u, 1e-9)
    assert k1 == k2 == 4
    np.testing.assert_allclose(d1, d2, atol=1e-12)
    np.testing.assert_allclose(d1, [0.3, 0, -(2 + 1j), 1j], atol=1e-12)
    np.testing.assert_allclose(r1, r2, rtol=1e-12, atol=1e-15)


def test_back_substitute(kernels):
    r = np.array([[2, 1, 0], [0, 1, 3], [0, 0, 4]], dtype=complex)
    x = np.array([1, -1, 2j])
    np.testing.assert_allclose(kernels.back_substitute(r, r @ x), x, atol=1e-14)


@pytest.mark.parametrize("roots", [[1, 2, 3], [1j, -1j, 0.5], [-5.0], [2, -2, 1 + 1j, 3 - 0.5j]])
def test_durand_kerner_simple_roots(kernels, roots):
    c = np.poly(roots)[::-1][:-1]  # lowest first, drop leading 1
    z0 = 1.5 * np.exp(1j * (2 * np.pi * np.arange(len(roots)) / len(roots) + 0.4))
    z, it, ok = kernels.durand_kerner(c, z0, 500, 1e-14)
    assert ok
    assert sorted(np.round(z, 10), key=lambda w: (w.real, w.imag)) == \
        sorted(np.round(np.array(roots, dtype=complex), 10), key=lambda w: (w.real, w.imag))


def test_durand_kerner_reports_nonconvergence(kernels):
    c = np.array([0, 0, 0], dtype=complex)  # triple root: linear convergence
    z, it, ok = kernels.durand_kerner(c, [0.5, 0.5j, -0.5], 3, 1e-14)
    assert not ok and it == 3


def test_poly_divmod(kernels):
    # (x^3 - 2x) / (3x^2 - 2): quotient x/3, remainder -(4/3) x + 0
    q, r = kernels.poly_divmod(np.array([0, -2, 0, 1], complex), np.array([-2, 0, 3], complex))
    np.testing.assert_allclose(q, [0, 1 / 3], atol=1e-15)
    np.testing.assert_allclose(r, [0, -4 / 3], atol=1e-15)


def test_poly_divmod_short_dividend(kernels):
    q, r = kernels.poly_divmod(np.array([1, 2], complex), np.array([1, 1, 1], complex))
    assert q.size == 0
    np.testing.assert_array_equal(r, [1, 2])


def test_poly_eval(kernels):
    assert kernels.poly_eval(np.array([1, 2, 3], complex), 2j) == 1 + 4j - 12


def test_fallback_selected_without_extension(monkeypatch):
    import importlib
    import sys

    monkeypatch.setitem(sys.modules, "minpolydiag._ckernels", None)  # import now fails
    try:
        mod = importlib.reload(_kernels)
        assert mod.BACKEND == "python"
        assert mod.mgs_dependence is _pykernels.mgs_dependence
    finally:
        monkeypatch.undo()
        importlib.reload(_kernels)
