"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary
(``pytest tests/test_acceptance.py``); running this file directly with
``python3 tests/test_acceptance.py`` prints the same lines without pytest.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import numpy as np

from minpolydiag.diagnosis import (
    diagnose,
    faddeev_leverrier,
    oracle_minimal_polynomial,
    pt_symmetry_check,
)
from minpolydiag.generate import random_hermitian, random_jordan_matrix
from minpolydiag.matrix import ComplexMatrix, mat_power
from minpolydiag.minpoly import evaluate_at_matrix, minimal_polynomial
from minpolydiag.poly import GenPolynomial, MonicPolynomial, derivative, gcd, poly_divmod
from minpolydiag.ptwell import PTWellConfig, build_ptwell, ptwell_family
from minpolydiag.scalar import GaussRational, Mode
from minpolydiag.sweep import SweepConfig, sweep

try:
    from .conftest import ACCEPTANCE_RESULTS
except ImportError:  # run as a script
    ACCEPTANCE_RESULTS = {}

XI_GRID = ["0", "1/2", "1", "6/5", "2", "3"]
SQRT2 = 1.414213562373
R = Mode.RATIONAL


def _record(key: int, checks: list[tuple[str, bool]], extra: str = "") -> None:
    failed = [name for name, ok in checks if not ok]
    detail = ("all checks met" if not failed else "failed: " + ", ".join(failed)) + (f" ({extra})" if extra else "")
    ACCEPTANCE_RESULTS[key] = (not failed, detail)
    print(f"{'PASS' if not failed else 'FAIL'}  criterion {key}: {detail}")
    assert not failed, detail


def _cubic(xi2, mode=R) -> MonicPolynomial:
    return MonicPolynomial((0, xi2 - 2, 0), mode)


def angle(u, v) -> float:
    c = abs(np.vdot(u, v)) / (np.linalg.norm(u) * np.linalg.norm(v))
    return math.acos(min(1.0, c))


def test_criterion_1_minimal_polynomial_of_well():
    t0 = time.perf_counter()
    exact_ok, float_dev = True, 0.0
    for xi in XI_GRID:
        x = Fraction(xi)
        exact_ok &= minimal_polynomial(build_ptwell(PTWellConfig(xi), R)).minimal == _cubic(x * x)
        got = minimal_polynomial(build_ptwell(PTWellConfig(xi))).minimal
        want = [0, float(x * x) - 2, 0]
        float_dev = max(float_dev, max(abs(a - b) for a, b in zip(got.coeffs, want)) if got.degree == 3 else math.inf)
    elapsed = time.perf_counter() - t0
    _record(1, [("rational exact", exact_ok), ("float deviation <= 1e-10", float_dev <= 1e-10),
                ("runtime < 1 s", elapsed < 1.0)],
            f"max float deviation {float_dev:.1e}, {elapsed:.3f} s")


def test_criterion_2_power_identity():
    exact_ok, float_res = True, 0.0
    for xi in XI_GRID:
        x = Fraction(xi)
        h = build_ptwell(PTWellConfig(xi), R)
        exact_ok &= (mat_power(h, 3) - h.scale(2 - x * x)).is_zero()
        hf = build_ptwell(PTWellConfig(xi))
        float_res = max(float_res, (mat_power(hf, 3) - hf.scale(2 - float(x * x))).frobenius_norm())
    _record(2, [("rational residual exactly 0", exact_ok), ("float residual <= 1e-12", float_res <= 1e-12)],
            f"max float residual {float_res:.1e}")


def test_criterion_3_exceptional_points():
    t0 = time.perf_counter()
    fam = ptwell_family()
    checks = []
    worst = 0.0
    for lo, hi, target in ((0.0, 3.0, SQRT2), (-3.0, 0.0, -SQRT2)):
        pts = sweep(fam, SweepConfig(lo, hi, 300, 1e-9))
        tag = f"[{lo:g},{hi:g}]"
        checks.append((f"{tag} exactly one point", len(pts) == 1))
        if len(pts) != 1:
            continue
        p = pts[0]
        worst = max(worst, abs(p.parameter - target))
        rep = p.report
        entries = [e for e in rep.eigen_entries if e.minpoly_multiplicity == 3]
        checks += [
            (f"{tag} location within 1e-9", abs(p.parameter - target) <= 1e-9),
            (f"{tag} gcd degree 2", rep.gcd_degree == 2),
            (f"{tag} multiplicity-3 root at |root| <= 1e-6", len(entries) == 1 and abs(entries[0].value) <= 1e-6),
        ]
        if entries:
            e = entries[0]
            checks += [
                (f"{tag} geometric multiplicity 1", e.geometric_multiplicity == 1),
                (f"{tag} eigenvector angle <= 1e-8",
                 e.geometric_multiplicity == 1 and angle(e.eigenvectors[0], [1, -1j * p.parameter, -1]) <= 1e-8),
            ]
    elapsed = time.perf_counter() - t0
    checks.append(("runtime < 5 s", elapsed < 5.0))
    _record(3, checks, f"max location error {worst:.1e}, {elapsed:.2f} s")


def test_criterion_4_euclid_step():
    checks = []
    for xi in XI_GRID + ["-7/3", "5/11"]:
        x = Fraction(xi)
        m = _cubic(x * x)
        q, r = poly_divmod(m, derivative(m))
        checks.append((f"divmod xi={xi}", q == GenPolynomial((0, Fraction(1, 3)), R)
                       and r == GenPolynomial((0, Fraction(2, 3) * (x * x - 2)), R)))
    m1 = _cubic(GaussRational(1))
    checks.append(("gcd at xi=1 is 1", gcd(m1, derivative(m1)) == MonicPolynomial((), R)))
    m2 = _cubic(GaussRational(2))
    checks.append(("gcd at xi^2=2 is lambda^2", gcd(m2, derivative(m2)) == MonicPolynomial((0, 0), R)))
    _record(4, checks)


def test_criterion_5_oracle_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20261015)
    degree_ok = coeff_ok = truth_ok = 0
    borderline = 0
    worst = 0.0
    for i in range(200):
        s = random_jordan_matrix(rng, 3 + i % 3, cond=10.0)
        r = minimal_polynomial(s.matrix)
        o = oracle_minimal_polynomial(s.matrix)
        borderline += r.borderline
        truth_ok += r.minimal.degree == s.minimal.degree
        if r.minimal.degree == o.degree:
            degree_ok += 1
            err = max((abs(a - b) for a, b in zip(r.minimal.coeffs, o.coeffs)), default=0.0)
            worst = max(worst, err)
            coeff_ok += err <= 1e-6
    elapsed = time.perf_counter() - t0
    _record(5, [("degree agreement 200/200", degree_ok == 200),
                ("coefficients within 1e-6 on >= 198/200", coeff_ok >= 198),
                ("runtime < 30 s", elapsed < 30.0)],
            f"degree {degree_ok}/200, coefficients {coeff_ok}/200, max error {worst:.1e}, "
            f"matches known Jordan structure {truth_ok}/200, borderline {borderline}, {elapsed:.2f} s")


def test_criterion_6_property_suites():
    rng = np.random.default_rng(6)
    annih = divis = consist = True
    for i in range(120):
        n = 1 + i % 8
        s = random_jordan_matrix(rng, n)
        m = s.matrix
        r = minimal_polynomial(m)
        scale = max(1.0, m.frobenius_norm()) ** r.dependence_degree
        annih &= evaluate_at_matrix(r.minimal, m).frobenius_norm() <= 1e-8 * scale
        cp = GenPolynomial(tuple(faddeev_leverrier(m)))
        divis &= poly_divmod(cp, r.minimal.general(), 0.0)[1].norm() <= 1e-6 * cp.norm()
        rep = diagnose(m)
        simple = all(e.minpoly_multiplicity == 1 for e in rep.eigen_entries)
        consist &= rep.diagonalizable == simple == (rep.gcd_degree == 0) == s.diagonalizable
    pt = all(pt_symmetry_check(build_ptwell(PTWellConfig(xi, n, conv)))
             for xi in np.linspace(-3, 3, 25) for n in (1, 3, 5, 7, 9) for conv in ("H", "H0"))
    pt &= all(pt_symmetry_check(build_ptwell(PTWellConfig(xi, n), R)) for xi in XI_GRID for n in (3, 5))
    herm = sum(diagnose(random_hermitian(rng, 2 + k % 6)).diagonalizable for k in range(100))
    _record(6, [("annihilation residual", annih), ("characteristic divisible by minimal (N <= 8)", divis),
                ("diagonalizable <=> simple roots <=> deg gcd = 0", consist),
                ("PT symmetry of every ptwell matrix", pt), ("hermitian => diagonalizable 100/100", herm == 100)],
            f"hermitian {herm}/100")


def test_criterion_7_exact_reproducibility():
    # everything is 3x3; rerunning the exact computations gives identical objects
    def snapshot():
        out = []
        for xi in XI_GRID:
            h = build_ptwell(PTWellConfig(xi), R)
            mp = minimal_polynomial(h)
            out.append((h.n, mp.minimal, mp.combination, poly_divmod(mp.minimal, derivative(mp.minimal))))
        return out

    a, b = snapshot(), snapshot()
    all_exact = all(isinstance(c, GaussRational) for row in a for c in row[1].coeffs)
    _record(7, [("all matrices 3x3", all(x[0] == 3 for x in a)), ("rational results exact", all_exact),
                ("bitwise reproducible", a == b)])


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
