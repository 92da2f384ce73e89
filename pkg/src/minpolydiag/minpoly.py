"""Minimal polynomial from the first linear dependence among matrix powers.

The powers ``E, M, M**2, ...`` are flattened to vectors of length ``N**2`` and
orthogonalized one at a time. The first power that adds no new direction
determines the minimal polynomial; the characteristic polynomial is never
formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .matrix import ComplexMatrix, vectorize
from .poly import MonicPolynomial
from .scalar import GaussRational, Mode

DEFAULT_RANK_TOL = 1e-9


@dataclass(frozen=True)
class MinPolyResult:
    minimal: MonicPolynomial
    dependence_degree: int
    residuals: tuple = ()
    combination: tuple = ()
    rank_tol: float = DEFAULT_RANK_TOL
    forced: bool = field(default=False)
    """True if power N had to be taken as dependent although its residual
    exceeded ``rank_tol`` (only possible in float mode with a tiny tolerance)."""

    @property
    def borderline(self) -> bool:
        """Some residual lies within a factor 10 of the rank threshold."""
        if self.minimal.mode is Mode.RATIONAL or self.rank_tol == 0:
            return False
        return any(self.rank_tol / 10 < r <= self.rank_tol * 10 for r in self.residuals)


def _float_minpoly(m: ComplexMatrix, rank_tol: float, reorth: bool) -> MinPolyResult:
    n = m.n
    a = m.as_complex()
    rows = np.empty((n + 1, n * n), dtype=np.complex128)
    scales = np.empty(n + 1)
    p = np.eye(n, dtype=np.complex128)
    for j in range(n + 1):
        if j:
            p = a @ p
        s = max(1.0, float(np.linalg.norm(p)))
        scales[j] = s
        rows[j] = p.reshape(-1) / s
    k, d, residuals = _kernels.mgs_dependence(rows, rank_tol, reorth)
    forced = False
    if d is None:
        # Cayley-Hamilton guarantees dependence by power n; accept the
        # smallest threshold that admits it and record that it was forced
        forced = True
        k, d, residuals = _kernels.mgs_dependence(rows, float(residuals[-1]) * (1 + 1e-12), reorth)
    comb = d * (scales[k] / scales[:k])
    return MinPolyResult(
        minimal=MonicPolynomial(tuple(-comb + 0.0), Mode.FLOAT),  # + 0.0 clears signed zeros
        dependence_degree=k,
        residuals=tuple(float(r) for r in residuals),
        combination=tuple(complex(c) for c in comb),
        rank_tol=rank_tol,
        forced=forced,
    )


def _rational_minpoly(m: ComplexMatrix) -> MinPolyResult:
    n = m.n
    basis: list[list] = []       # orthogonal (unnormalized) vectors
    norms2: list = []            # their squared norms, exact
    R: list[list] = []           # R[j][i]: coefficient of basis[i] in power j (unit diagonal)
    residuals = []
    p = ComplexMatrix.identity(n, Mode.RATIONAL)
    for j in range(n + 1):
        if j:
            p = m @ p
        v = list(vectorize(p).components)
        coef = []
        for q, qq in zip(basis, norms2):
            c = sum((x.conjugate() * y for x, y in zip(q, v)), GaussRational(0)) / qq
            if c:
                v = [y - c * x for x, y in zip(q, v)]
            coef.append(c)
        nv2 = sum((x.abs2() for x in v), 0)
        residuals.append(float(nv2) ** 0.5)
        if nv2 == 0:
            d = [GaussRational(0)] * j
            for i in range(j - 1, -1, -1):
                s = coef[i]
                for l in range(i + 1, j):
                    s = s - R[l][i] * d[l]
                d[i] = s
            return MinPolyResult(
                minimal=MonicPolynomial(tuple(-c for c in d), Mode.RATIONAL),
                dependence_degree=j,
                residuals=tuple(residuals),
                combination=tuple(d),
                rank_tol=0.0,
            )
        basis.append(v)
        norms2.append(nv2)
        R.append(coef)
    raise AssertionError("no dependence among n+1 powers")  # unreachable by Cayley-Hamilton


def minimal_polynomial(m: ComplexMatrix, rank_tol: float = DEFAULT_RANK_TOL,
                       reorth: bool = True) -> MinPolyResult:
    """Minimal polynomial of ``m`` via Gram-Schmidt on its vectorized powers.

    Float mode scales each power by ``1/max(1, ||M**n||_F)`` and calls a power
    dependent once its modified Gram-Schmidt residual (with one
    reorthogonalization pass) is ``<= rank_tol``. The combination is recovered
    by back-substitution through the triangular Gram-Schmidt factor. Rational
    mode runs the same procedure exactly with unnormalized orthogonal vectors.
    """
    if rank_tol < 0:
        raise ValueError("rank_tol must be non-negative")
    if m.mode is Mode.RATIONAL:
        return _rational_minpoly(m)
    return _float_minpoly(m, rank_tol, reorth)


def characteristic_from_minimal(r: MinPolyResult, n: int) -> MonicPolynomial | None:
    """The characteristic polynomial when it is forced to equal the minimal one.

    Only a full-degree minimal polynomial (degree ``n``) pins the
    characteristic polynomial down; otherwise ``None``.
    """
    return r.minimal if r.dependence_degree == n else None


def evaluate_at_matrix(p: MonicPolynomial, m: ComplexMatrix) -> ComplexMatrix:
    """``p(M)`` by Horner's rule."""
    acc = ComplexMatrix.identity(m.n, m.mode)
    for c in reversed(p.coeffs):
        acc = (m @ acc) + ComplexMatrix.identity(m.n, m.mode).scale(c)
    return acc
