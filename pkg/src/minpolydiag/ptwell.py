"""Discretized PT-symmetric square well.

A particle in a box of length 4L under the potential ``-iZ`` (left half),
``0`` (centre), ``+iZ`` (right half) is sampled on ``n`` interior lattice
points (``n`` odd, walls at the outermost points). With the kinetic term as
the second-difference stencil and the overall energy scale
``eta = hbar**2 / (2 m L**2)`` dropped, the Hamiltonian is ``H0 = 2E - H``
where ``H`` has unit off-diagonals and diagonal ``+i xi, ..., 0, ..., -i xi``
with ``xi = Z / eta``. For ``n = 3``::

    H = [[i xi, 1,  0    ],
         [1,    0,  1    ],
         [0,    1, -i xi ]]
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .matrix import ComplexMatrix
from .scalar import GaussRational, Mode


class Convention(str, enum.Enum):
    H = "H"
    H0 = "H0"


@dataclass(frozen=True)
class PTWellConfig:
    xi: object = 0
    interior_points: int = 3
    convention: Convention = Convention.H

    def __post_init__(self):
        object.__setattr__(self, "convention", Convention(self.convention))
        n = self.interior_points
        if not isinstance(n, int) or n < 1 or n % 2 == 0:
            raise ValueError(f"interior_points must be an odd positive integer, got {n!r}")


def _xi_value(xi, mode: Mode):
    # Fraction accepts ints, exact floats and decimal strings like "6/5"
    value = Fraction(xi)
    return float(value) if mode is Mode.FLOAT else value


def build_ptwell(cfg: PTWellConfig, mode: Mode | str = Mode.FLOAT) -> ComplexMatrix:
    mode = Mode(mode)
    n = cfg.interior_points
    xi = _xi_value(cfg.xi, mode)
    centre = n // 2
    if mode is Mode.FLOAT:
        pot = lambda s: complex(0, s * xi)  # noqa: E731
    else:
        pot = lambda s: GaussRational(0, s * xi)  # noqa: E731
    rows = []
    for j in range(n):
        row = [0] * n
        if j < centre:
            row[j] = pot(1)
        elif j > centre:
            row[j] = pot(-1)
        if j > 0:
            row[j - 1] = 1
        if j < n - 1:
            row[j + 1] = 1
        rows.append(row)
    h = ComplexMatrix.from_rows(rows, mode)
    if cfg.convention is Convention.H0:
        return ComplexMatrix.identity(n, mode).scale(2) - h
    return h


@dataclass(frozen=True)
class MatrixFamily:
    """One-parameter family ``evaluate(t) -> ComplexMatrix``; must be pure."""

    evaluate: Callable[[object], ComplexMatrix]
    dim: int
    label: str

    def __call__(self, t) -> ComplexMatrix:
        return self.evaluate(t)


def ptwell_family(interior_points: int = 3, convention: Convention | str = Convention.H,
                  mode: Mode | str = Mode.FLOAT) -> MatrixFamily:
    # validate eagerly so a bad config fails at construction time
    PTWellConfig(0, interior_points, convention)
    conv = Convention(convention)
    mode = Mode(mode)

    def evaluate(xi):
        return build_ptwell(PTWellConfig(xi, interior_points, conv), mode)

    return MatrixFamily(evaluate, interior_points, f"ptwell(n={interior_points}, convention={conv.value})")


def constant_family(m: ComplexMatrix, label: str = "constant") -> MatrixFamily:
    return MatrixFamily(lambda _t: m, m.n, label)


def linear_family(a: ComplexMatrix, b: ComplexMatrix, label: str = "linear") -> MatrixFamily:
    """``t -> A + t B``."""
    return MatrixFamily(lambda t: a + b.scale(t), a.n, label)
