"""Command-line interface.

Exit codes: 0 success (``check``: diagonalizable), 1 ``check`` found a
non-diagonalizable matrix, 2 any error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from .diagnosis import ToleranceConfig, diagnose
from .generate import random_hermitian, random_jordan_matrix
from .io import (
    FormatError,
    dumps,
    load_matrix,
    matrix_to_json,
    minpoly_to_json,
    point_to_json,
    report_to_json,
)
from .matrix import DEFAULT_TOL, ComplexMatrix
from .minpoly import DEFAULT_RANK_TOL, minimal_polynomial
from .poly import DEFAULT_TRUNC_TOL, RootFindingError
from .ptwell import PTWellConfig, build_ptwell, ptwell_family
from .scalar import Mode
from .sweep import SweepConfig, SweepError, sample_grid, sweep, write_grid_csv


def _fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None


def _common(suppress: bool) -> argparse.ArgumentParser:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--mode", choices=["float", "rational"], default=d(None),
                   help="scalar field (default: the input file's, float for generated matrices)")
    p.add_argument("--tol", type=float, default=d(DEFAULT_TOL), help="kernel pivot tolerance")
    p.add_argument("--trunc-tol", type=float, default=d(DEFAULT_TRUNC_TOL), help="Euclid truncation tolerance")
    p.add_argument("--rank-tol", type=float, default=d(DEFAULT_RANK_TOL), help="power-dependence threshold")
    p.add_argument("--seed", type=int, default=d(0), help="seed for the 'random' subcommand")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minpolydiag", parents=[_common(False)],
                                     description="Diagonalizability via the minimal polynomial.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    p = sub.add_parser("minpoly", parents=[common], help="minimal polynomial of a matrix JSON file")
    p.add_argument("matrix")

    p = sub.add_parser("check", parents=[common], help="diagonalizability report for a matrix JSON file")
    p.add_argument("matrix")

    p = sub.add_parser("ptwell", parents=[common], help="emit the discretized PT square-well matrix")
    p.add_argument("--xi", type=_fraction, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--convention", choices=["H", "H0"], default="H")

    p = sub.add_parser("sweep", parents=[common], help="locate exceptional points of a matrix family")
    p.add_argument("--family", choices=["ptwell"], default="ptwell")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--convention", choices=["H", "H0"], default="H")
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, default=300)
    p.add_argument("--refine", type=float, default=1e-9)
    p.add_argument("--detector", choices=["disc", "gcd"], default="disc")
    p.add_argument("--csv", help="write the grid (parameter, discriminant, gcd degree) here")

    p = sub.add_parser("random", parents=[common], help="random test matrix with known Jordan structure")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--cond", type=float, default=10.0, help="similarity condition number bound")
    p.add_argument("--hermitian", action="store_true")
    return parser


def _tolerances(args) -> ToleranceConfig:
    return ToleranceConfig(tol=args.tol, rank_tol=args.rank_tol, trunc_tol=args.trunc_tol)


def _load(args) -> ComplexMatrix:
    m = load_matrix(args.matrix)
    if args.mode == "float":
        return m.to_float()
    if args.mode == "rational" and m.mode is Mode.FLOAT:
        return ComplexMatrix.from_rows(m.data.tolist(), Mode.RATIONAL)
    return m


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def run(args) -> int:
    if args.command == "minpoly":
        _emit(minpoly_to_json(minimal_polynomial(_load(args), args.rank_tol)))
        return 0
    if args.command == "check":
        try:
            report = diagnose(_load(args), _tolerances(args))
        except RootFindingError as exc:
            if exc.partial is not None:
                _emit(report_to_json(exc.partial))
            raise
        _emit(report_to_json(report))
        return 0 if report.diagonalizable else 1
    if args.command == "ptwell":
        m = build_ptwell(PTWellConfig(args.xi, args.n, args.convention), args.mode or "float")
        _emit(matrix_to_json(m))
        return 0
    if args.command == "sweep":
        family = ptwell_family(args.n, args.convention)
        cfg = SweepConfig(args.start, args.stop, args.steps, args.refine, args.detector, _tolerances(args))
        samples = sample_grid(family, cfg, with_disc=True)
        if args.csv:
            write_grid_csv(args.csv, samples)
        _emit([point_to_json(p) for p in sweep(family, cfg, samples)])
        return 0
    if args.command == "random":
        rng = np.random.default_rng(args.seed)
        if args.hermitian:
            m = random_hermitian(rng, args.n)
        else:
            m = random_jordan_matrix(rng, args.n, args.cond).matrix
        if args.mode == "rational":
            m = ComplexMatrix.from_rows(m.data.tolist(), Mode.RATIONAL)
        _emit(matrix_to_json(m))
        return 0
    raise AssertionError(args.command)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (FormatError, SweepError, RootFindingError, OSError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"minpolydiag: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
