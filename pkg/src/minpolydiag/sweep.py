"""Locate exceptional points of one-parameter matrix families.

Two detectors work off the minimal polynomial ``m`` sampled on a uniform
grid:

``disc``
    sign changes of the (real) discriminant of ``m``, refined by bisection.
    Needs real coefficients, as PT-symmetric families have. Only one point
    per grid interval is resolved and double roots that touch without a
    sign change are invisible; raise ``grid_steps`` if in doubt.
``gcd``
    changes of ``deg gcd(m, m')``. The nonconstant-gcd region around an
    isolated exceptional point is only ``~trunc_tol`` wide, so grid nodes
    rarely fall inside it; the search therefore also follows local minima of
    the Euclidean remainder margin (see :func:`poly.euclid`) by golden-section
    search until the gcd turns nonconstant, then bisects both edges of that
    band and reports its centre.
"""

from __future__ import annotations

import csv
import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .diagnosis import DiagnosisReport, ToleranceConfig, diagnose
from .minpoly import minimal_polynomial
from .poly import derivative, discriminant, discriminant_scale, euclid
from .ptwell import MatrixFamily

NODE_ZERO_RATIO = 1e-13
_GOLDEN = (math.sqrt(5) - 1) / 2


class Detector(str, enum.Enum):
    DISCRIMINANT = "disc"
    GCD_DEGREE = "gcd"


class SweepError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    param_min: float
    param_max: float
    grid_steps: int = 300
    refine_tol: float = 1e-9
    detector: Detector = Detector.DISCRIMINANT
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "detector", Detector(self.detector))
        if not self.param_min < self.param_max:
            raise ValueError("param_min must be < param_max")
        if self.refine_tol <= 0:
            raise ValueError("refine_tol must be positive")
        if self.grid_steps < 1:
            raise ValueError("grid_steps must be a positive integer")

    def grid(self) -> np.ndarray:
        return np.linspace(self.param_min, self.param_max, self.grid_steps + 1)


@dataclass(frozen=True)
class GridSample:
    parameter: float
    degree: int
    discriminant: complex | None
    disc_scale: float
    gcd_degree: int
    margin: float
    real_coeffs: bool

    @property
    def disc_sign(self) -> int:
        if self.discriminant is None:
            return 0
        return int(np.sign(self.discriminant.real))


@dataclass(frozen=True)
class ExceptionalPoint:
    parameter: float
    bracket: tuple
    coalescing_value: complex
    gcd_degree_at_point: int
    report: DiagnosisReport


def sample(family: MatrixFamily, t: float, tols: ToleranceConfig, with_disc: bool = True) -> GridSample:
    p = minimal_polynomial(family(t), tols.rank_tol).minimal
    d = p.degree
    coeffs = [complex(c) for c in p.coeffs]
    cscale = 1.0 + max((abs(c) for c in coeffs), default=0.0)
    real = all(abs(c.imag) <= tols.rank_tol * cscale for c in coeffs)
    disc, dscale = None, 1.0
    if with_disc and d >= 2:
        disc = complex(discriminant(p))
        dscale = discriminant_scale(p)
    eu = euclid(p, derivative(p), tols.trunc_tol)
    return GridSample(float(t), d, disc, dscale, eu.gcd.degree, eu.margin, real)


def sample_grid(family: MatrixFamily, cfg: SweepConfig, with_disc: bool = True) -> list[GridSample]:
    grid = cfg.grid()
    tols = cfg.tolerances
    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as pool:
            return list(pool.map(lambda t: sample(family, t, tols, with_disc), grid))
    return [sample(family, t, tols, with_disc) for t in grid]


def _coalescing_value(report: DiagnosisReport) -> complex:
    entries = report.eigen_entries
    if not entries:
        return complex("nan")
    best = max(entries, key=lambda e: e.minpoly_multiplicity)
    if best.minpoly_multiplicity > 1 or len(entries) == 1:
        return best.value
    pairs = [(abs(a.value - b.value), (a.value + b.value) / 2)
             for i, a in enumerate(entries) for b in entries[i + 1:]]
    return min(pairs, key=lambda x: x[0])[1]


def _package(family, t, bracket, tols) -> ExceptionalPoint:
    report = diagnose(family(t), tols)
    return ExceptionalPoint(float(t), (float(bracket[0]), float(bracket[1])),
                            _coalescing_value(report), report.gcd_degree, report)


class _Searcher:
    def __init__(self, family: MatrixFamily, cfg: SweepConfig):
        self.family = family
        self.cfg = cfg
        self.tols = cfg.tolerances

    @property
    def half_width(self) -> float:
        # a hair under refine_tol/2 so rounding of centre +- h cannot widen the bracket
        return 0.4999 * self.cfg.refine_tol

    def at(self, t, with_disc=True) -> GridSample:
        return sample(self.family, t, self.tols, with_disc)

    # discriminant detector ------------------------------------------------

    def bisect_sign(self, lo: float, hi: float, sign_lo: int):
        while hi - lo > self.cfg.refine_tol:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            s = self.at(mid).disc_sign
            if s == 0:
                return mid, (mid, mid)
            if s == sign_lo:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi), (lo, hi)

    def is_zero_node(self, s: GridSample) -> bool:
        if s.discriminant is None:
            return False
        if s.discriminant.real == 0:
            return True
        return abs(s.discriminant) <= NODE_ZERO_RATIO * s.disc_scale and s.gcd_degree >= 1

    def discriminant_points(self, samples: list[GridSample]) -> list[tuple]:
        for s in samples:
            if s.degree >= 2 and not s.real_coeffs:
                raise SweepError(
                    f"minimal polynomial has non-real coefficients at parameter {s.parameter!r}; "
                    "the discriminant detector needs real coefficients, use the gcd detector")
        found = []
        used = set()
        n = len(samples)
        for i, s in enumerate(samples):
            if not self.is_zero_node(s):
                continue
            used.update({i - 1, i})
            l, r = samples[i - 1] if i > 0 else None, samples[i + 1] if i + 1 < n else None
            if (s.discriminant.real != 0 and l is not None and r is not None
                    and not self.is_zero_node(l) and not self.is_zero_node(r)
                    and l.degree == r.degree and l.disc_sign * r.disc_sign < 0):
                found.append(self.bisect_sign(l.parameter, r.parameter, l.disc_sign))
            else:
                found.append((s.parameter, (s.parameter, s.parameter)))
        for i in range(n - 1):
            if i in used:
                continue
            a, b = samples[i], samples[i + 1]
            if a.degree != b.degree:
                found.extend(self.gcd_window_points(a, b))
            elif a.disc_sign * b.disc_sign < 0:
                found.append(self.bisect_sign(a.parameter, b.parameter, a.disc_sign))
        found.extend(self.touching_points(samples, used))
        return found

    def touching_points(self, samples: list[GridSample], used: set) -> list[tuple]:
        """Zeros of even order, where the discriminant touches 0 without a sign change.

        Two pairs coalescing at once give such a zero. Candidates are interior
        local minima of ``|D| / scale`` between nodes of equal sign; each is
        confirmed by the gcd criterion before it is reported.
        """
        rel = [abs(s.discriminant) / s.disc_scale if s.discriminant is not None else math.inf
               for s in samples]
        found = []
        for i in range(1, len(samples) - 1):
            if used & {i - 1, i, i + 1}:
                continue
            a, s, b = samples[i - 1], samples[i], samples[i + 1]
            if not (a.degree == s.degree == b.degree and a.disc_sign == s.disc_sign == b.disc_sign != 0):
                continue
            if rel[i] <= rel[i - 1] and rel[i] <= rel[i + 1] and rel[i] < max(rel[i - 1], rel[i + 1]):
                inside = self.golden_probe(a.parameter, b.parameter)
                if inside is not None:
                    found.append(self.band_point(a.parameter, b.parameter, inside))
        return found

    # gcd detector ---------------------------------------------------------

    def bisect_edge(self, outside: float, inside: float) -> float:
        """Boundary between a point with constant gcd and one inside the band."""
        tol = self.cfg.refine_tol / 2
        while abs(inside - outside) > tol:
            mid = 0.5 * (outside + inside)
            if mid in (outside, inside):
                break
            if self.at(mid, False).gcd_degree >= 1:
                inside = mid
            else:
                outside = mid
        return 0.5 * (outside + inside)

    def golden_probe(self, a: float, b: float):
        """Minimize the Euclid margin on [a, b]; stop at the first point with nonconstant gcd."""
        def f(t):
            s = self.at(t, False)
            return s, (s.margin if math.isfinite(s.margin) else 1e300)

        c = b - _GOLDEN * (b - a)
        d = a + _GOLDEN * (b - a)
        sc, fc = f(c)
        sd, fd = f(d)
        for s in (sc, sd):
            if s.gcd_degree >= 1:
                return s.parameter
        while b - a > self.cfg.refine_tol:
            if fc <= fd:
                b, d, sd, fd = d, c, sc, fc
                c = b - _GOLDEN * (b - a)
                sc, fc = f(c)
                if sc.gcd_degree >= 1:
                    return c
            else:
                a, c, sc, fc = c, d, sd, fd
                d = a + _GOLDEN * (b - a)
                sd, fd = f(d)
                if sd.gcd_degree >= 1:
                    return d
        return None

    def band_point(self, lo: float, hi: float, inside: float) -> tuple:
        left = self.bisect_edge(lo, inside) if self.at(lo, False).gcd_degree == 0 else lo
        right = self.bisect_edge(hi, inside) if self.at(hi, False).gcd_degree == 0 else hi
        centre = 0.5 * (left + right)
        h = self.half_width
        return centre, (centre - h, centre + h)

    def gcd_window_points(self, a: GridSample, b: GridSample) -> list[tuple]:
        if a.gcd_degree == 0 and b.gcd_degree == 0:
            inside = self.golden_probe(a.parameter, b.parameter)
            return [] if inside is None else [self.band_point(a.parameter, b.parameter, inside)]
        if a.gcd_degree >= 1 and b.gcd_degree >= 1:
            return []
        out, inn = (a, b) if a.gcd_degree == 0 else (b, a)
        edge = self.bisect_edge(out.parameter, inn.parameter)
        h = self.half_width
        return [(edge, (edge - h, edge + h))]

    def gcd_points(self, samples: list[GridSample]) -> list[tuple]:
        n = len(samples)
        found = []
        i = 0
        # runs of nodes already inside a nonconstant-gcd band
        while i < n:
            if samples[i].gcd_degree == 0:
                i += 1
                continue
            j = i
            while j + 1 < n and samples[j + 1].gcd_degree >= 1:
                j += 1
            lo = samples[i - 1].parameter if i > 0 else samples[i].parameter
            hi = samples[j + 1].parameter if j + 1 < n else samples[j].parameter
            if i == j:
                found.append(self.band_point(lo, hi, samples[i].parameter))
            else:
                # extended non-diagonalizable stretch: report its onsets
                h = self.half_width
                if i > 0:
                    e = self.bisect_edge(lo, samples[i].parameter)
                    found.append((e, (e - h, e + h)))
                if j + 1 < n:
                    e = self.bisect_edge(hi, samples[j].parameter)
                    found.append((e, (e - h, e + h)))
            i = j + 1
        # local minima of the margin between nodes with constant gcd
        for i, s in enumerate(samples):
            if s.gcd_degree != 0 or not math.isfinite(s.margin):
                continue
            nb = [samples[k] for k in (i - 1, i + 1) if 0 <= k < n]
            if any(q.gcd_degree != 0 for q in nb):
                continue
            margins = [q.margin for q in nb]
            if all(s.margin <= m for m in margins) and any(s.margin < m for m in margins):
                lo = nb[0].parameter if i > 0 else s.parameter
                hi = nb[-1].parameter if i + 1 < n else s.parameter
                inside = self.golden_probe(lo, hi)
                if inside is not None:
                    found.append(self.band_point(lo, hi, inside))
        return found


def _dedupe(points: list[tuple], tol: float) -> list[tuple]:
    out: list[tuple] = []
    for p in sorted(points, key=lambda x: x[0]):
        if out and abs(p[0] - out[-1][0]) <= 2 * tol:
            continue
        out.append(p)
    return out


def sweep(family: MatrixFamily, cfg: SweepConfig, samples: list[GridSample] | None = None) -> list[ExceptionalPoint]:
    """Exceptional points of ``family`` over ``[param_min, param_max]``.

    ``samples`` may pass in a grid already computed by :func:`sample_grid`
    (e.g. for a CSV dump) to avoid recomputing it.
    """
    if samples is None:
        samples = sample_grid(family, cfg, cfg.detector is Detector.DISCRIMINANT)
    s = _Searcher(family, cfg)
    if cfg.detector is Detector.DISCRIMINANT:
        raw = s.discriminant_points(samples)
    else:
        raw = s.gcd_points(samples)
    return [_package(family, t, br, cfg.tolerances) for t, br in _dedupe(raw, cfg.refine_tol)]


def write_grid_csv(path, samples: list[GridSample]) -> None:
    """Columns ``parameter,discriminant_re,discriminant_im,gcd_degree``."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["parameter", "discriminant_re", "discriminant_im", "gcd_degree"])
        for s in samples:
            d = s.discriminant
            re_, im_ = ("nan", "nan") if d is None else (format(d.real + 0.0, ".17g"), format(d.imag + 0.0, ".17g"))
            w.writerow([format(s.parameter, ".17g"), re_, im_, s.gcd_degree])
