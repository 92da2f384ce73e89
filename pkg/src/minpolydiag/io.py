"""JSON wire formats.

Floats are written with 17 significant digits and objects keep insertion
order, so output is byte-for-byte reproducible. Rational scalars travel as
``["p/q", "r/s"]`` string pairs, float scalars as ``[re, im]`` numbers.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

from .diagnosis import DiagnosisReport
from .matrix import ComplexMatrix
from .minpoly import MinPolyResult
from .poly import GenPolynomial, MonicPolynomial
from .scalar import GaussRational, Mode
from .sweep import ExceptionalPoint


class FormatError(ValueError):
    pass


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    if x == 0:
        return "0.0"
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """Deterministic JSON encoder (17 significant digits for floats)."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (list, tuple, dict)) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def encode_scalar(x, mode: Mode):
    if mode is Mode.RATIONAL:
        g = GaussRational.coerce(x)
        return [str(g.re), str(g.im)]
    z = complex(x)
    return [z.real + 0.0, z.imag + 0.0]


def decode_scalar(v, mode: Mode):
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise FormatError(f"scalar must be a [re, im] pair, got {v!r}")
    re_, im_ = v
    if mode is Mode.RATIONAL:
        try:
            return GaussRational(Fraction(str(re_)), Fraction(str(im_)))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational component in {v!r}: {exc}") from None
    if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v):
        raise FormatError(f"float scalar components must be numbers, got {v!r}")
    return complex(float(re_), float(im_))


def matrix_to_json(m: ComplexMatrix) -> dict:
    return {
        "n": m.n,
        "mode": m.mode.value,
        "rows": [[encode_scalar(x, m.mode) for x in row] for row in m.data],
    }


def matrix_from_json(d) -> ComplexMatrix:
    if not isinstance(d, dict):
        raise FormatError("matrix JSON must be an object")
    try:
        mode = Mode(d.get("mode", "float"))
    except ValueError:
        raise FormatError(f"unknown mode {d.get('mode')!r}") from None
    rows = d.get("rows")
    n = d.get("n")
    if not isinstance(rows, list) or not rows:
        raise FormatError("'rows' must be a non-empty list")
    if n is None:
        n = len(rows)
    if not isinstance(n, int) or isinstance(n, bool) or n != len(rows):
        raise FormatError(f"'n' ({n!r}) does not match the number of rows ({len(rows)})")
    for r in rows:
        if not isinstance(r, list) or len(r) != n:
            raise FormatError(f"every row must have {n} entries")
    return ComplexMatrix.from_rows([[decode_scalar(x, mode) for x in r] for r in rows], mode)


def poly_to_json(p) -> dict:
    monic = isinstance(p, MonicPolynomial)
    return {
        "mode": p.mode.value,
        "monic": monic,
        "coeffs": [encode_scalar(c, p.mode) for c in p.coeffs],
    }


def poly_from_json(d):
    try:
        mode = Mode(d.get("mode", "float"))
        coeffs = tuple(decode_scalar(c, mode) for c in d["coeffs"])
    except (KeyError, AttributeError, ValueError) as exc:
        raise FormatError(f"bad polynomial JSON: {exc}") from None
    if d.get("monic", True):
        return MonicPolynomial(coeffs, mode)
    return GenPolynomial(coeffs, mode)


def minpoly_to_json(r: MinPolyResult) -> dict:
    mode = r.minimal.mode
    return {
        "minimal": poly_to_json(r.minimal),
        "dependence_degree": r.dependence_degree,
        "residuals": [float(x) for x in r.residuals],
        "combination": [encode_scalar(c, mode) for c in r.combination],
        "rank_tol": r.rank_tol,
        "borderline": r.borderline,
        "forced": r.forced,
    }


def _vec(v) -> list:
    return [encode_scalar(x, Mode.FLOAT) for x in np.asarray(v, dtype=np.complex128)]


def report_to_json(r: DiagnosisReport) -> dict:
    return {
        "diagonalizable": r.diagonalizable,
        "minpoly": poly_to_json(r.minpoly),
        "gcd_with_derivative": poly_to_json(r.gcd_with_derivative),
        "eigen_entries": [
            {
                "value": encode_scalar(e.value, Mode.FLOAT),
                "minpoly_multiplicity": e.minpoly_multiplicity,
                "geometric_multiplicity": e.geometric_multiplicity,
                "eigenvectors": [_vec(v) for v in e.eigenvectors],
            }
            for e in r.eigen_entries
        ],
        "condition_flags": list(r.condition_flags),
    }


def point_to_json(p: ExceptionalPoint) -> dict:
    return {
        "parameter": p.parameter,
        "bracket": list(p.bracket),
        "coalescing_value": encode_scalar(p.coalescing_value, Mode.FLOAT),
        "gcd_degree_at_point": p.gcd_degree_at_point,
        "report": report_to_json(p.report),
    }


def load_matrix(path) -> ComplexMatrix:
    try:
        with open(path) as fh:
            d = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
    return matrix_from_json(d)
