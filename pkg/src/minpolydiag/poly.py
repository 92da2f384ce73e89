"""Univariate polynomials over the two scalar fields.

Coefficients are stored lowest degree first. A :class:`MonicPolynomial`
omits its leading 1; a :class:`GenPolynomial` stores it explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .scalar import GaussRational, Mode, one, to_scalar, zero

DEFAULT_TRUNC_TOL = 1e-8
DEFAULT_CLUSTER_TOL = 1e-7
DEFAULT_MAX_ITERS = 500
SYLVESTER_MAX_DEGREE = 8


class PolynomialError(ValueError):
    pass


class RootFindingError(RuntimeError):
    """Durand-Kerner did not converge; ``best`` holds the last iterate."""

    def __init__(self, msg, best=None, partial=None):
        super().__init__(msg)
        self.best = best
        self.partial = partial


def _is_zero(x) -> bool:
    return not x


@dataclass(frozen=True)
class GenPolynomial:
    coeffs: tuple
    mode: Mode = Mode.FLOAT

    def __post_init__(self):
        mode = Mode(self.mode)
        object.__setattr__(self, "mode", mode)
        cs = [to_scalar(c, mode) for c in self.coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1]

    def norm(self) -> float:
        return math.sqrt(sum(abs(complex(c)) ** 2 for c in self.coeffs))

    def __call__(self, x):
        acc = zero(self.mode)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "GenPolynomial") -> "GenPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        z = zero(self.mode)
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return GenPolynomial(tuple(x + y for x, y in zip(a, b)), self.mode)

    def __neg__(self) -> "GenPolynomial":
        return GenPolynomial(tuple(-c for c in self.coeffs), self.mode)

    def __sub__(self, other: "GenPolynomial") -> "GenPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GenPolynomial):
            if self.is_zero or other.is_zero:
                return GenPolynomial((), self.mode)
            out = [zero(self.mode)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return GenPolynomial(tuple(out), self.mode)
        c = to_scalar(other, self.mode)
        return GenPolynomial(tuple(x * c for x in self.coeffs), self.mode)

    __rmul__ = __mul__

    def to_float(self) -> "GenPolynomial":
        return GenPolynomial(tuple(complex(c) for c in self.coeffs), Mode.FLOAT)

    def as_array(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coeffs], dtype=np.complex128)


@dataclass(frozen=True)
class MonicPolynomial:
    """``lambda**d + coeffs[d-1] lambda**(d-1) + ... + coeffs[0]``."""

    coeffs: tuple
    mode: Mode = Mode.FLOAT

    def __post_init__(self):
        mode = Mode(self.mode)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "coeffs", tuple(to_scalar(c, mode) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def general(self) -> GenPolynomial:
        return GenPolynomial(self.coeffs + (one(self.mode),), self.mode)

    def norm(self) -> float:
        return self.general().norm()

    def __call__(self, x):
        return self.general()(x)

    def to_float(self) -> "MonicPolynomial":
        return MonicPolynomial(tuple(complex(c) for c in self.coeffs), Mode.FLOAT)

    @classmethod
    def from_roots(cls, roots: Sequence, mode: Mode | str = Mode.FLOAT) -> "MonicPolynomial":
        mode = Mode(mode)
        p = GenPolynomial((one(mode),), mode)
        for r in roots:
            p = p * GenPolynomial((-to_scalar(r, mode), one(mode)), mode)
        return cls(p.coeffs[:-1], mode)


def as_general(p) -> GenPolynomial:
    return p.general() if isinstance(p, MonicPolynomial) else p


def make_monic(p) -> MonicPolynomial:
    p = as_general(p)
    if p.is_zero:
        raise PolynomialError("zero polynomial cannot be made monic")
    lead = p.lead
    return MonicPolynomial(tuple(c / lead for c in p.coeffs[:-1]), p.mode)


def derivative(p) -> GenPolynomial:
    """Formal derivative. Raises for constants, whose derivative is zero."""
    g = as_general(p)
    if g.degree < 1:
        raise PolynomialError("derivative of a constant polynomial")
    return GenPolynomial(tuple(c * k for k, c in enumerate(g.coeffs) if k > 0), g.mode)


def _nth_derivative(p: GenPolynomial, k: int) -> GenPolynomial:
    for _ in range(k):
        p = derivative(p) if p.degree >= 1 else GenPolynomial((), p.mode)
    return p


def poly_divmod(a, b, trunc_tol: float = DEFAULT_TRUNC_TOL):
    """Return ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``.

    Rational mode is exact. In float mode remainder coefficients with
    modulus below ``trunc_tol * (||a|| + ||b||)`` are flushed to zero.
    """
    a, b = as_general(a), as_general(b)
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero polynomial")
    if a.mode is not b.mode:
        raise PolynomialError("scalar modes differ")
    mode = a.mode
    if a.degree < b.degree:
        return GenPolynomial((), mode), a
    if mode is Mode.FLOAT:
        q, r = _kernels.poly_divmod(a.as_array(), b.as_array())
        cut = trunc_tol * (a.norm() + b.norm())
        r = np.where(np.abs(r) < cut, 0, r)
        return GenPolynomial(tuple(q), mode), GenPolynomial(tuple(r), mode)
    rem = list(a.coeffs)
    nb = len(b.coeffs)
    lead = b.lead
    q = [zero(mode)] * (len(rem) - nb + 1)
    for k in range(len(rem) - nb, -1, -1):
        t = rem[k + nb - 1] / lead
        q[k] = t
        if t:
            for j in range(nb):
                rem[k + j] = rem[k + j] - t * b.coeffs[j]
    return GenPolynomial(tuple(q), mode), GenPolynomial(tuple(rem[:nb - 1]), mode)


class EuclidResult(NamedTuple):
    gcd: MonicPolynomial
    margin: float
    """Smallest remainder-norm ratio met before stopping (float mode)."""


def euclid(a, b, trunc_tol: float = DEFAULT_TRUNC_TOL) -> EuclidResult:
    """Euclidean remainder sequence of ``a`` and ``b``.

    Float mode first substitutes ``lambda = s*mu`` with ``s`` the geometric
    mean of the nonzero root magnitudes of the higher-degree input, so
    coefficients stay balanced for large roots, then stops when a remainder norm drops below
    ``trunc_tol * max(||a||, ||b||)``. ``margin`` is the smallest ratio
    ``||r_i|| / max(||a||, ||b||)`` seen over the nonterminal remainders, so
    ``margin < trunc_tol`` exactly when the gcd is nonconstant; it is ``inf``
    when no informative remainder exists. Rational mode is exact and reports
    ``margin`` as 0 or ``inf``.
    """
    a, b = as_general(a), as_general(b)
    if a.is_zero and b.is_zero:
        raise PolynomialError("gcd of two zero polynomials")
    if a.is_zero:
        return EuclidResult(make_monic(b), 0.0)
    if b.is_zero:
        return EuclidResult(make_monic(a), 0.0)
    if a.degree < b.degree:
        a, b = b, a
    exact = a.mode is Mode.RATIONAL
    s = 1.0 if exact else _balance_scale(make_monic(a))
    if s > 1.0:
        g = euclid(_rescale(a, s), _rescale(b, s), trunc_tol)
        return EuclidResult(make_monic(_rescale(g.gcd.general(), 1.0 / s)), g.margin)
    scale = max(a.norm(), b.norm())
    margin = math.inf
    r0, r1 = a, b
    while r1.degree > 0:
        _, r = poly_divmod(r0, r1, trunc_tol)
        if exact:
            if r.is_zero:
                margin = 0.0
                break
        else:
            ratio = r.norm() / scale
            margin = min(margin, ratio)
            if ratio < trunc_tol:
                break
        r0, r1 = r1, r
    return EuclidResult(make_monic(r1), margin)


def _balance_scale(p: MonicPolynomial) -> float:
    """Geometric mean of the nonzero root magnitudes, at least 1."""
    d = p.degree
    j = next((k for k, c in enumerate(p.coeffs) if c), d)
    if j == d:
        return 1.0
    return max(1.0, abs(complex(p.coeffs[j])) ** (1.0 / (d - j)))


def _rescale(p: GenPolynomial, s: float) -> GenPolynomial:
    """``p(s*mu) / s**deg p``: maps roots of size ``s`` onto the unit disk."""
    d = p.degree
    return GenPolynomial(tuple(c * s ** (k - d) for k, c in enumerate(p.coeffs)), p.mode)


def gcd(a, b, trunc_tol: float = DEFAULT_TRUNC_TOL) -> MonicPolynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    return euclid(a, b, trunc_tol).gcd


def quotient(a, b, trunc_tol: float = DEFAULT_TRUNC_TOL) -> GenPolynomial:
    return poly_divmod(a, b, trunc_tol)[0]


class Root(NamedTuple):
    value: complex
    multiplicity: int


@dataclass
class RootAnalysis:
    roots: list
    gcd_with_derivative: MonicPolynomial
    flags: list


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    d = c.shape[0]
    center = -c[d - 1] / d
    # Fujiwara-type bound on the root radius
    radius = 2.0 * max(abs(c[k]) ** (1.0 / (d - k)) for k in range(d))
    radius = max(radius, 1e-3)
    k = np.arange(d)
    return center + radius * np.exp(1j * (2 * np.pi * k / d + 0.4))


def _newton_polish(p: GenPolynomial, z: complex, steps: int = 4) -> complex:
    c = p.as_array()
    dc = derivative(p).as_array() if p.degree >= 1 else np.zeros(0)
    best, best_res = z, abs(_kernels.poly_eval(c, z))
    for _ in range(steps):
        f = _kernels.poly_eval(c, z)
        df = _kernels.poly_eval(dc, z) if dc.size else 0j
        if df == 0:
            break
        z = z - f / df
        res = abs(_kernels.poly_eval(c, z))
        if res < best_res:
            best, best_res = z, res
        else:
            break
    return best


def simple_roots(p: MonicPolynomial, max_iters: int = DEFAULT_MAX_ITERS) -> np.ndarray:
    """All roots of ``p`` by Durand-Kerner; intended for square-free input."""
    p = p.to_float()
    d = p.degree
    if d == 0:
        return np.zeros(0, dtype=np.complex128)
    c = np.array(p.coeffs, dtype=np.complex128)
    if d == 1:
        return np.array([-c[0]])
    z, _, ok = _kernels.durand_kerner(c, _initial_guesses(c), max_iters, 1e-14)
    if not ok:
        # stagnation at rounding level still counts as converged
        full = np.append(c, 1.0)
        scale = np.array([sum(abs(full[i]) * abs(zi) ** i for i in range(d + 1)) for zi in z])
        res = np.array([abs(_kernels.poly_eval(full, zi)) for zi in z])
        if not np.all(res <= 1e-9 * scale):
            raise RootFindingError(f"Durand-Kerner did not converge in {max_iters} iterations", best=z)
    g = p.general()
    return np.array([_newton_polish(g, zi) for zi in z])


def _analyze(p: MonicPolynomial, trunc_tol: float, cluster_tol: float, max_iters: int,
             flags: list) -> tuple[list[Root], MonicPolynomial]:
    d = p.degree
    if d == 0:
        return [], p
    if d == 1:
        return [Root(complex(-p.coeffs[0]), 1)], MonicPolynomial((), p.mode)
    g = gcd(p, derivative(p), trunc_tol)
    sqf = p if g.degree == 0 else make_monic(quotient(p, g, trunc_tol))
    distinct = simple_roots(sqf, max_iters)
    mult = [1] * len(distinct)
    if g.degree > 0:
        sub, _ = _analyze(g, trunc_tol, cluster_tol, max_iters, flags)
        for r, m in sub:
            dist = np.abs(distinct - r)
            j = int(np.argmin(dist))
            if dist[j] > math.sqrt(cluster_tol) * max(1.0, abs(r)) and "multiplicity-match-distant" not in flags:
                flags.append("multiplicity-match-distant")
            mult[j] += m
    return [Root(complex(z), m) for z, m in zip(distinct, mult)], g


def _polish_multiple(p: GenPolynomial, r: Root) -> Root:
    # a root of multiplicity m is simple for the (m-1)-th derivative
    target = _nth_derivative(p, r.multiplicity - 1)
    z = _newton_polish(target, r.value)
    if abs(z - r.value) <= 1e-4 * max(1.0, abs(r.value)):
        return Root(z, r.multiplicity)
    return r


def _merge_close(roots: list[Root], cluster_tol: float, flags: list) -> list[Root]:
    merged: list[list] = []
    for r in sorted(roots, key=lambda r: (r.value.real, r.value.imag)):
        for grp in merged:
            if abs(grp[0] - r.value) <= cluster_tol * max(1.0, abs(r.value)):
                w = grp[1] + r.multiplicity
                grp[0] = (grp[0] * grp[1] + r.value * r.multiplicity) / w
                grp[1] = w
                if "roots-merged" not in flags:
                    flags.append("roots-merged")
                break
        else:
            merged.append([r.value, r.multiplicity])
    return [Root(complex(v), m) for v, m in merged]


def analyze_roots(p: MonicPolynomial, trunc_tol: float = DEFAULT_TRUNC_TOL,
                  cluster_tol: float = DEFAULT_CLUSTER_TOL,
                  max_iters: int = DEFAULT_MAX_ITERS) -> RootAnalysis:
    """Roots with multiplicities plus the gcd of ``p`` and ``p'``.

    The gcd chain ``p, gcd(p, p'), gcd(g, g'), ...`` runs in ``p``'s own
    scalar mode, so multiplicities are exact for rational input. Distinct
    roots come from Durand-Kerner on the square-free part. By construction
    ``sum(m - 1) == deg gcd(p, p')`` unless close roots get merged.
    """
    flags: list = []
    roots, g = _analyze(p, trunc_tol, cluster_tol, max_iters, flags)
    full = p.to_float().general()
    roots = [_polish_multiple(full, r) for r in roots]
    roots = _merge_close(roots, cluster_tol, flags)
    return RootAnalysis(roots, g, flags)


def roots(p: MonicPolynomial, trunc_tol: float = DEFAULT_TRUNC_TOL,
          cluster_tol: float = DEFAULT_CLUSTER_TOL, max_iters: int = DEFAULT_MAX_ITERS) -> list[Root]:
    """Distinct roots of ``p`` with multiplicities, sorted by (real, imag)."""
    return analyze_roots(p, trunc_tol, cluster_tol, max_iters).roots


def sylvester_matrix(a: GenPolynomial, b: GenPolynomial) -> list[list]:
    m, n = a.degree, b.degree
    z = zero(a.mode)
    size = m + n
    rows = []
    ra = list(reversed(a.coeffs))
    rb = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([z] * i + ra + [z] * (size - m - 1 - i))
    for i in range(m):
        rows.append([z] * i + rb + [z] * (size - n - 1 - i))
    return rows


def exact_det(rows: list[list]) -> GaussRational:
    """Determinant over the Gaussian rationals by Gaussian elimination."""
    a = [[GaussRational.coerce(x) for x in row] for row in rows]
    n = len(a)
    det = GaussRational(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return GaussRational(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pk = a[k][k]
        det = det * pk
        for i in range(k + 1, n):
            f = a[i][k]
            if f:
                f = f / pk
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def resultant(a, b):
    a, b = as_general(a), as_general(b)
    rows = sylvester_matrix(a, b)
    if a.mode is Mode.RATIONAL:
        return exact_det(rows)
    return complex(exact_det([[GaussRational.coerce(complex(x)) for x in r] for r in rows]))


def discriminant(p: MonicPolynomial):
    """Discriminant of a monic polynomial, zero iff a root is repeated.

    Computed as ``(-1)**(d(d-1)/2) * Res(p, p')``. Float input of degree at
    most 8 is evaluated exactly on the binary values of its coefficients, so
    the only error is that already present in the coefficients; higher float
    degrees use the product of squared root differences.
    """
    d = p.degree
    if d < 2:
        raise PolynomialError("discriminant needs degree >= 2")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    if p.mode is Mode.RATIONAL or d <= SYLVESTER_MAX_DEGREE:
        return resultant(p, derivative(p)) * sign
    rs = roots(p)
    if any(r.multiplicity > 1 for r in rs):
        return 0j
    vals = [r.value for r in rs]
    acc = 1 + 0j
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            acc *= (vals[i] - vals[j]) ** 2
    return acc


def root_scale(p: MonicPolynomial) -> float:
    """Magnitude bound for the roots, at least 1."""
    d = p.degree
    if d == 0:
        return 1.0
    return max(1.0, max(abs(complex(c)) ** (1.0 / (d - k)) for k, c in enumerate(p.coeffs)))


def discriminant_scale(p: MonicPolynomial) -> float:
    """Natural size of the discriminant: ``root_scale**(d(d-1))``."""
    d = p.degree
    return root_scale(p) ** (d * (d - 1))


def snap_rational(z: complex, p: MonicPolynomial, max_den: int = 10**6):
    """Exact Gaussian-rational root of rational ``p`` near ``z``, or None."""
    if p.mode is not Mode.RATIONAL:
        return None
    cand = GaussRational(Fraction(z.real).limit_denominator(max_den),
                         Fraction(z.imag).limit_denominator(max_den))
    return cand if not p(cand) else None


def eval_complex(p, z: complex) -> complex:
    return complex(as_general(p).to_float()(complex(z)))


__all__ = [
    "GenPolynomial", "MonicPolynomial", "Root", "RootAnalysis", "EuclidResult",
    "PolynomialError", "RootFindingError", "derivative", "poly_divmod", "gcd", "euclid",
    "roots", "analyze_roots", "simple_roots", "discriminant", "resultant", "make_monic",
    "quotient", "root_scale", "discriminant_scale", "sylvester_matrix", "exact_det",
]
