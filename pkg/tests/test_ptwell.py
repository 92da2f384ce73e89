from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minpolydiag.diagnosis import diagnose, pt_symmetry_check
from minpolydiag.matrix import ComplexMatrix, vectorize
from minpolydiag.ptwell import PTWellConfig, build_ptwell, ptwell_family
from minpolydiag.scalar import GaussRational, Mode

xis = st.floats(-5, 5, allow_nan=False)
odd_n = st.sampled_from([1, 3, 5, 7, 9])


def test_three_point_matrix():
    x = 0.9
    got = vectorize(build_ptwell(PTWellConfig(x))).components
    np.testing.assert_array_equal(got, [1j * x, 1, 0, 1, 0, 1, 0, 1, -1j * x])


def test_three_point_rational():
    m = build_ptwell(PTWellConfig("6/5"), "rational")
    assert m.data[0, 0] == GaussRational(0, Fraction(6, 5))
    assert m.data[2, 2] == GaussRational(0, Fraction(-6, 5))


def test_free_particle_spectrum():
    m = build_ptwell(PTWellConfig(0))
    assert np.array_equal(m.as_complex(), m.as_complex().T.conj())
    ev = np.sort(np.linalg.eigvalsh(m.as_complex()))
    np.testing.assert_allclose(ev, [-np.sqrt(2), 0, np.sqrt(2)], atol=1e-14)


def test_h0_is_shifted_negation():
    h = build_ptwell(PTWellConfig("1/3"), "rational")
    h0 = build_ptwell(PTWellConfig("1/3", 3, "H0"), "rational")
    assert h0 == ComplexMatrix.identity(3, "rational").scale(2) - h


def test_five_point_layout():
    m = build_ptwell(PTWellConfig(2, 5)).as_complex()
    np.testing.assert_array_equal(np.diag(m), [2j, 2j, 0, -2j, -2j])
    np.testing.assert_array_equal(np.diag(m, 1), np.ones(4))
    np.testing.assert_array_equal(np.diag(m, -1), np.ones(4))


@pytest.mark.parametrize("n", [0, 2, 4, -1])
def test_even_or_nonpositive_rejected(n):
    with pytest.raises(ValueError):
        PTWellConfig(1, n)
    with pytest.raises(ValueError):
        ptwell_family(n)


def test_family_is_pure_and_labelled():
    fam = ptwell_family(5, "H0")
    assert fam(0.7) == fam(0.7)
    assert fam.dim == 5 and "n=5" in fam.label and "H0" in fam.label


def test_family_at_exceptional_point():
    rep = diagnose(ptwell_family()(np.sqrt(2)))
    assert not rep.diagonalizable


@given(xis, odd_n, st.sampled_from(["H", "H0"]))
def test_pt_symmetry_float(xi, n, conv):
    assert pt_symmetry_check(build_ptwell(PTWellConfig(xi, n, conv)))


@given(st.fractions(-5, 5, max_denominator=100), odd_n, st.sampled_from(["H", "H0"]))
@settings(max_examples=40)
def test_pt_symmetry_rational(xi, n, conv):
    assert pt_symmetry_check(build_ptwell(PTWellConfig(xi, n, conv), Mode.RATIONAL))


@given(xis)
def test_zero_mode_vector(xi):
    h = build_ptwell(PTWellConfig(xi)).as_complex()
    assert np.linalg.norm(h @ np.array([1, -1j * xi, -1])) == 0


@given(st.fractions(-5, 5, max_denominator=100))
@settings(max_examples=40)
def test_zero_mode_vector_exact(xi):
    h = build_ptwell(PTWellConfig(xi), Mode.RATIONAL)
    v = np.array([GaussRational(1), GaussRational(0, -xi), GaussRational(-1)], dtype=object)
    assert all(x == 0 for x in h.data @ v)


@given(st.floats(-3, 3, allow_nan=False), st.sampled_from([3, 5]))
@settings(max_examples=60, deadline=None)
def test_h_and_h0_verdicts_agree(xi, n):
    a = diagnose(build_ptwell(PTWellConfig(xi, n)))
    b = diagnose(build_ptwell(PTWellConfig(xi, n, "H0")))
    assert a.diagonalizable == b.diagonalizable
    assert a.gcd_degree == b.gcd_degree
