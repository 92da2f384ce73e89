"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is timed on identical inputs under both backends; the end-to-end
rows swap the backend used by the library for a full minimal-polynomial /
sweep run.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from minpolydiag import _pykernels, minpoly, poly

try:
    from minpolydiag import _ckernels
except ImportError:
    _ckernels = None


def _inputs(rng):
    n = 6
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rows = np.empty((n + 1, n * n), dtype=complex)
    p = np.eye(n, dtype=complex)
    for j in range(n + 1):
        rows[j] = (p / max(1.0, np.linalg.norm(p))).reshape(-1)
        p = a @ p
    roots = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    coeffs = np.poly(roots)[::-1][:-1].astype(complex)
    z0 = 3 * np.exp(1j * (2 * np.pi * np.arange(8) / 8 + 0.4))
    num = rng.standard_normal(12) + 1j * rng.standard_normal(12)
    den = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    return {
        "mgs_dependence (7 x 36)": lambda k: k.mgs_dependence(rows, 1e-9),
        "durand_kerner (degree 8)": lambda k: k.durand_kerner(coeffs, z0, 500, 1e-14),
        "poly_divmod (11 / 4)": lambda k: k.poly_divmod(num, den),
    }


def _end_to_end():
    from minpolydiag.ptwell import ptwell_family
    from minpolydiag.sweep import SweepConfig, sweep
    from minpolydiag.generate import random_jordan_matrix

    rng = np.random.default_rng(0)
    mats = [random_jordan_matrix(rng, 5).matrix for _ in range(50)]
    fam = ptwell_family()
    return {
        "minimal_polynomial x 50 (5 x 5)": lambda: [minpoly.minimal_polynomial(m) for m in mats],
        "sweep ptwell [0, 3], 300 steps": lambda: sweep(fam, SweepConfig(0, 3, 300)),
    }


def _with_backend(k, fn):
    saved = (minpoly._kernels, poly._kernels)
    minpoly._kernels = poly._kernels = k
    try:
        return fn()
    finally:
        minpoly._kernels, poly._kernels = saved


def _best(fn, repeat):
    t = timeit.Timer(fn)
    number, _ = t.autorange()
    return min(t.repeat(repeat, number)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled extension not built; timing the python backend only")
    header = f"{'benchmark':36s}" + "".join(f"{name:>14s}" for name, _ in backends) + ("   speedup" if _ckernels else "")
    print(header)
    print("-" * len(header))

    def row(label, times):
        line = f"{label:36s}" + "".join(f"{t * 1e6:12.1f}us" for t in times)
        if len(times) == 2:
            line += f"   {times[0] / times[1]:6.1f}x"
        print(line)

    for label, fn in _inputs(np.random.default_rng(1)).items():
        row(label, [_best(lambda k=k: fn(k), args.repeat) for _, k in backends])
    for label, fn in _end_to_end().items():
        row(label, [_best(lambda k=k: _with_backend(k, fn), max(1, args.repeat // 2)) for _, k in backends])


if __name__ == "__main__":
    main()
