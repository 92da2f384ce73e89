"""Random test matrices with known Jordan structure."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import ComplexMatrix
from .poly import MonicPolynomial

# pairwise distance >= 1, so eigenvalues never cluster by accident
EIGENVALUE_POOL = [complex(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)]


@dataclass(frozen=True)
class JordanSample:
    matrix: ComplexMatrix
    eigenvalues: tuple
    blocks: tuple
    """``blocks[i]`` lists the Jordan block sizes for ``eigenvalues[i]``."""

    @property
    def minimal(self) -> MonicPolynomial:
        roots = [lam for lam, bs in zip(self.eigenvalues, self.blocks) for _ in range(max(bs))]
        return MonicPolynomial.from_roots(roots)

    @property
    def diagonalizable(self) -> bool:
        return all(max(bs) == 1 for bs in self.blocks)


def _random_partition(rng: np.random.Generator, n: int, parts: int) -> list[int]:
    cuts = sorted(rng.choice(np.arange(1, n), size=parts - 1, replace=False)) if parts > 1 else []
    edges = [0, *cuts, n]
    return [b - a for a, b in zip(edges, edges[1:])]


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_similarity(rng: np.random.Generator, n: int, cond: float = 10.0) -> np.ndarray:
    """``U diag(s) V*`` with singular values in ``[1, cond]``; condition number <= cond."""
    s = np.exp(rng.uniform(0, np.log(cond), n))
    s[0], s[-1] = 1.0, cond
    return random_unitary(rng, n) @ np.diag(s) @ random_unitary(rng, n).conj().T


def random_jordan_matrix(rng: np.random.Generator, n: int, cond: float = 10.0) -> JordanSample:
    """``S J S^-1`` for a random Jordan form ``J`` and well-conditioned ``S``."""
    k = int(rng.integers(1, n + 1))
    eig = [EIGENVALUE_POOL[i] for i in rng.choice(len(EIGENVALUE_POOL), size=k, replace=False)]
    sizes = _random_partition(rng, n, k)
    j = np.zeros((n, n), dtype=np.complex128)
    blocks = []
    pos = 0
    for lam, size in zip(eig, sizes):
        nb = int(rng.integers(1, size + 1))
        bs = _random_partition(rng, size, nb)
        blocks.append(tuple(sorted(bs, reverse=True)))
        for b in bs:
            for t in range(b):
                j[pos + t, pos + t] = lam
                if t + 1 < b:
                    j[pos + t, pos + t + 1] = 1.0
            pos += b
    s = random_similarity(rng, n, cond)
    m = s @ j @ np.linalg.inv(s)
    return JordanSample(ComplexMatrix.from_rows(m), tuple(eig), tuple(blocks))


def random_hermitian(rng: np.random.Generator, n: int) -> ComplexMatrix:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return ComplexMatrix.from_rows((z + z.conj().T) / 2)
