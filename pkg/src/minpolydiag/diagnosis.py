"""Diagonalizability verdict and multiplicity report."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .matrix import DEFAULT_TOL, ComplexMatrix, kernel_basis
from .minpoly import DEFAULT_RANK_TOL, MinPolyResult, minimal_polynomial
from .poly import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_MAX_ITERS,
    DEFAULT_TRUNC_TOL,
    MonicPolynomial,
    RootFindingError,
    analyze_roots,
    derivative,
    discriminant,
    discriminant_scale,
    gcd,
    snap_rational,
)
from .scalar import Mode

NEAR_EXCEPTIONAL_RATIO = 1e-12
DEFAULT_ORACLE_BOUND = 8


class OracleBoundError(ValueError):
    pass


@dataclass(frozen=True)
class ToleranceConfig:
    tol: float = DEFAULT_TOL
    rank_tol: float = DEFAULT_RANK_TOL
    trunc_tol: float = DEFAULT_TRUNC_TOL
    cluster_tol: float = DEFAULT_CLUSTER_TOL
    max_iters: int = DEFAULT_MAX_ITERS
    oracle_bound: int = DEFAULT_ORACLE_BOUND


@dataclass(frozen=True)
class EigenEntry:
    value: complex
    minpoly_multiplicity: int
    geometric_multiplicity: int
    eigenvectors: tuple = ()


@dataclass(frozen=True)
class DiagnosisReport:
    diagonalizable: bool
    minpoly: MonicPolynomial
    gcd_with_derivative: MonicPolynomial
    eigen_entries: tuple = ()
    condition_flags: tuple = ()
    minpoly_result: MinPolyResult | None = field(default=None, compare=False, repr=False)

    @property
    def gcd_degree(self) -> int:
        return self.gcd_with_derivative.degree


def _eigenvectors(m: ComplexMatrix, value: complex, exact_value, tol: float, flags: list):
    if exact_value is not None:
        vecs = kernel_basis(m.shift(exact_value), 0.0)
        out = []
        for v in vecs:
            v = v.astype(np.complex128)
            out.append(v / np.linalg.norm(v))
        return out
    mf = m.to_float()
    shifted = mf.shift(value)
    ref = mf.frobenius_norm()
    t = tol
    vecs = kernel_basis(shifted, t, ref)
    # a rounding-perturbed eigenvalue can leave M - lambda E just above the
    # pivot threshold; widen until the kernel appears
    while not vecs and t < 1e-4:
        t *= 10
        vecs = kernel_basis(shifted, t, ref)
        if vecs and "kernel-tolerance-escalated" not in flags:
            flags.append("kernel-tolerance-escalated")
    return list(vecs)


def diagnose(m: ComplexMatrix, cfg: ToleranceConfig | None = None) -> DiagnosisReport:
    """Decide diagonalizability from the minimal polynomial and ``gcd(m, m')``.

    Raises :class:`RootFindingError` with ``partial`` set to a report without
    eigen entries if root finding fails.
    """
    cfg = cfg or ToleranceConfig()
    mp = minimal_polynomial(m, cfg.rank_tol)
    p = mp.minimal
    flags: list = []
    if mp.borderline:
        flags.append("borderline-rank-residual")
    if mp.forced:
        flags.append("dependence-forced")
    try:
        ra = analyze_roots(p, cfg.trunc_tol, cfg.cluster_tol, cfg.max_iters)
    except RootFindingError as exc:
        g = gcd(p, derivative(p), cfg.trunc_tol) if p.degree else p
        exc.partial = DiagnosisReport(g.degree == 0, p, g, (), tuple(flags + ["root-finding-failed"]), mp)
        raise
    flags.extend(f for f in ra.flags if f not in flags)
    g = ra.gcd_with_derivative
    diagonalizable = g.degree == 0

    if diagonalizable and p.degree >= 2:
        disc = complex(discriminant(p))
        if abs(disc) < NEAR_EXCEPTIONAL_RATIO * discriminant_scale(p):
            flags.append("near-exceptional")

    entries = []
    for r in ra.roots:
        exact = snap_rational(r.value, p)
        vecs = _eigenvectors(m, r.value, exact, cfg.tol, flags)
        value = complex(exact) if exact is not None else r.value
        entries.append(EigenEntry(value, r.multiplicity, len(vecs), tuple(vecs)))
    entries.sort(key=lambda e: (e.value.real, e.value.imag))
    return DiagnosisReport(diagonalizable, p, g, tuple(entries), tuple(flags), mp)


def faddeev_leverrier(m: ComplexMatrix) -> np.ndarray:
    """Characteristic polynomial coefficients, lowest degree first, monic."""
    a = m.as_complex()
    n = a.shape[0]
    c = np.zeros(n + 1, dtype=np.complex128)
    c[n] = 1.0
    mk = np.zeros_like(a)
    eye = np.eye(n, dtype=np.complex128)
    for k in range(1, n + 1):
        mk = a @ mk + c[n - k + 1] * eye
        c[n - k] = -np.trace(a @ mk) / k
    return c


def _cluster(values: np.ndarray, tol: float) -> list[list[complex]]:
    groups: list[list[complex]] = []
    for v in sorted(values, key=lambda z: (z.real, z.imag)):
        for g in groups:
            if any(abs(v - w) <= tol for w in g):
                g.append(v)
                break
        else:
            groups.append([v])
    return groups


def oracle_minimal_polynomial(m: ComplexMatrix, cfg: ToleranceConfig | None = None,
                              cluster_tol: float = 1e-2, annihilate_tol: float = 1e-8) -> MonicPolynomial:
    """Minimal polynomial through the characteristic polynomial.

    Independent cross-check for :func:`minimal_polynomial`: expand
    ``det(lambda E - M)`` with the Faddeev-LeVerrier recursion, cluster its
    roots into distinct eigenvalues with algebraic multiplicities, then try
    exponent patterns in order of total degree until
    ``prod (M - mu_i E)**e_i`` vanishes.
    """
    cfg = cfg or ToleranceConfig()
    if m.n > cfg.oracle_bound:
        raise OracleBoundError(f"oracle limited to N <= {cfg.oracle_bound}, got {m.n}")
    mf = m.to_float()
    a = mf.as_complex()
    n = mf.n
    scale = max(1.0, float(np.linalg.norm(a)))
    charpoly = faddeev_leverrier(mf)
    eig = np.roots(charpoly[::-1]) if n > 0 else np.zeros(0)
    groups = _cluster(eig, cluster_tol * scale)
    mus = [complex(np.mean(g)) for g in groups]
    algebraic = [len(g) for g in groups]
    eye = np.eye(n, dtype=np.complex128)
    shifted = [a - mu * eye for mu in mus]
    patterns = sorted(itertools.product(*[range(1, k + 1) for k in algebraic]), key=lambda e: (sum(e), e))
    for e in patterns:
        prod = eye.copy()
        for s, k in zip(shifted, e):
            for _ in range(k):
                prod = prod @ s
        if np.linalg.norm(prod) <= annihilate_tol * scale ** sum(e):
            return MonicPolynomial.from_roots([mu for mu, k in zip(mus, e) for _ in range(k)])
    return MonicPolynomial(tuple(charpoly[:-1]))


def pt_symmetry_check(m: ComplexMatrix, tol: float = DEFAULT_TOL) -> bool:
    """True iff ``P conj(M) P == M`` for the anti-diagonal permutation ``P``."""
    reflected = m.conj().data[::-1, ::-1]
    if m.mode is Mode.RATIONAL:
        return bool(np.all(reflected == m.data))
    a = m.as_complex()
    return float(np.linalg.norm(reflected - a)) <= tol * max(1.0, float(np.linalg.norm(a)))
