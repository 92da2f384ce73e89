import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from minpolydiag.matrix import (
    ComplexMatrix,
    MatVector,
    devectorize,
    frobenius_inner,
    kernel_basis,
    mat_power,
    vectorize,
)
from minpolydiag.ptwell import PTWellConfig, build_ptwell
from minpolydiag.scalar import GaussRational, Mode

from .conftest import angle

XI = 0.7


def H(xi=XI, mode="float"):
    return build_ptwell(PTWellConfig(xi), mode)


def test_vectorize_identity_is_row_major():
    v = vectorize(ComplexMatrix.identity(3))
    assert v.components.tolist() == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_vectorize_h():
    v = vectorize(H())
    expected = [1j * XI, 1, 0, 1, 0, 1, 0, 1, -1j * XI]
    np.testing.assert_array_equal(v.components, expected)


def test_vectorize_zero():
    assert not np.any(vectorize(ComplexMatrix.zeros(4)).components)


def test_h_squared_entries():
    x = XI
    # (1,2) entry is i*xi*1 + 1*0 + 0*1 = +i*xi
    expected = [1 - x**2, 1j * x, 1, 1j * x, 2, -1j * x, 1, -1j * x, 1 - x**2]
    np.testing.assert_allclose(vectorize(mat_power(H(), 2)).components, expected, atol=1e-15)
    # the sign-flipped pattern is the square of H(-xi) = conj(H(xi))
    flipped = [1 - x**2, -1j * x, 1, -1j * x, 2, 1j * x, 1, 1j * x, 1 - x**2]
    np.testing.assert_allclose(vectorize(mat_power(H(-x), 2)).components, flipped, atol=1e-15)


@pytest.mark.parametrize("xi", ["0", "1/2", "1", "6/5", "2", "3", "-7/3"])
def test_h_cubed_is_multiple_of_h_exactly(xi):
    h = H(xi, "rational")
    xi2 = GaussRational(xi) * GaussRational(xi)
    assert mat_power(h, 3) == h.scale(2 - xi2)


def test_power_zero_is_identity():
    for mode in ("float", "rational"):
        m = H(1, mode)
        assert mat_power(m, 0) == ComplexMatrix.identity(3, mode)


def test_inner_products():
    e = vectorize(ComplexMatrix.identity(3))
    assert frobenius_inner(e, e) == 3
    # direct 9-term sum: conj(1)*(i xi) + conj(1)*0 + conj(1)*(-i xi) = 0
    assert abs(frobenius_inner(e, vectorize(H()))) == 0
    z = vectorize(ComplexMatrix.zeros(3))
    assert frobenius_inner(vectorize(H()), z) == 0


def test_inner_rational_is_sesquilinear():
    a = MatVector(np.array([GaussRational(0, 1), GaussRational(2)], dtype=object), Mode.RATIONAL)
    b = MatVector(np.array([GaussRational(0, 1), GaussRational(1, 1)], dtype=object), Mode.RATIONAL)
    assert frobenius_inner(a, b) == GaussRational(3, 2)


def test_inner_dimension_mismatch():
    with pytest.raises(ValueError):
        frobenius_inner(vectorize(ComplexMatrix.identity(2)), vectorize(ComplexMatrix.identity(3)))


def test_kernel_of_h_at_exceptional_point():
    xi = np.sqrt(2)
    basis = kernel_basis(H(xi), 1e-10)
    assert len(basis) == 1
    assert angle(basis[0], [1, -1j * xi, -1]) < 1e-12


def test_kernel_trivial_cases():
    assert kernel_basis(ComplexMatrix.identity(3)) == []
    assert len(kernel_basis(ComplexMatrix.zeros(3))) == 3
    assert len(kernel_basis(ComplexMatrix.zeros(3, "rational"))) == 3


def test_kernel_rational_exact():
    basis = kernel_basis(H("6/5", "rational"))
    assert len(basis) == 1
    v = basis[0]
    hv = H("6/5", "rational").data @ v
    assert all(x == 0 for x in hv)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        ComplexMatrix.from_rows([[1, 2, 3], [4, 5, 6]])


def test_matrices_are_immutable():
    m = H()
    with pytest.raises(ValueError):
        m.data[0, 0] = 5


def complex_matrices(max_n=5):
    elems = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)
    return st.integers(1, max_n).flatmap(
        lambda n: hnp.arrays(np.complex128, (n, n), elements=elems)).map(ComplexMatrix.from_rows)


@given(complex_matrices())
def test_devectorize_inverts_vectorize(m):
    assert devectorize(vectorize(m)) == m


@given(complex_matrices(), st.integers(0, 4), st.integers(0, 4))
@settings(max_examples=60)
def test_power_additivity(m, a, b):
    tol = 1e-10
    lhs = mat_power(m, a + b).as_complex()
    rhs = (mat_power(m, a) @ mat_power(m, b)).as_complex()
    scale = max(1.0, m.frobenius_norm()) ** (a + b)
    assert np.linalg.norm(lhs - rhs) <= tol * scale


@given(complex_matrices())
def test_inner_self_is_nonnegative_real(m):
    v = vectorize(m)
    s = frobenius_inner(v, v)
    assert abs(s.imag) <= 1e-12 * max(1.0, s.real)
    assert s.real >= 0
    if np.max(np.abs(m.data)) > 1e-150:  # squares underflow below this
        assert s.real > 0
    else:
        assert s.real >= 0


@given(st.integers(2, 6), st.integers(1, 5), st.integers(0, 2**32 - 1))
@settings(max_examples=60)
def test_kernel_vectors_are_annihilated(n, rank, seed):
    rng = np.random.default_rng(seed)
    rank = min(rank, n)
    a = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    b = rng.standard_normal((rank, n)) + 1j * rng.standard_normal((rank, n))
    m = ComplexMatrix.from_rows(a @ b)
    tol = 1e-10
    basis = kernel_basis(m, tol)
    assert len(basis) == n - rank
    for v in basis:
        assert np.linalg.norm(m.as_complex() @ v) <= tol * m.frobenius_norm() * np.linalg.norm(v) * 10
