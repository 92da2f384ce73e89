"""Dense square matrices over complex doubles or Gaussian rationals.

Both scalar modes share one storage idea: a 2-D numpy array, ``complex128``
in float mode and ``object`` (holding :class:`GaussRational`) in rational
mode. Arrays are frozen on construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scalar import GaussRational, Mode, to_scalar

DEFAULT_TOL = 1e-10


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _as_array(values, mode: Mode) -> np.ndarray:
    if mode is Mode.FLOAT:
        return np.array(values, dtype=np.complex128)
    raw = np.array(values, dtype=object)
    out = np.empty(raw.shape, dtype=object)
    for idx, x in np.ndenumerate(raw):
        out[idx] = GaussRational.coerce(x)
    return out


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """Square matrix with entries of a single scalar mode."""

    data: np.ndarray
    mode: Mode = Mode.FLOAT

    def __post_init__(self):
        mode = Mode(self.mode)
        object.__setattr__(self, "mode", mode)
        a = self.data
        if not (isinstance(a, np.ndarray) and a.dtype == (np.complex128 if mode is Mode.FLOAT else object)
                and not a.flags.writeable):
            a = _freeze(_as_array(a, mode))
            object.__setattr__(self, "data", a)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ValueError(f"matrix must be square and non-empty, got shape {a.shape}")

    @classmethod
    def from_rows(cls, rows, mode: Mode | str = Mode.FLOAT) -> "ComplexMatrix":
        return cls(_as_array(rows, Mode(mode)), Mode(mode))

    @classmethod
    def identity(cls, n: int, mode: Mode | str = Mode.FLOAT) -> "ComplexMatrix":
        mode = Mode(mode)
        if mode is Mode.FLOAT:
            return cls(np.eye(n, dtype=np.complex128), mode)
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], mode)

    @classmethod
    def zeros(cls, n: int, mode: Mode | str = Mode.FLOAT) -> "ComplexMatrix":
        return cls.from_rows([[0] * n for _ in range(n)], mode)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, idx):
        return self.data[idx]

    def _wrap(self, a: np.ndarray) -> "ComplexMatrix":
        return ComplexMatrix(_freeze(a), self.mode)

    def _check(self, other: "ComplexMatrix"):
        if self.mode is not other.mode:
            raise ValueError("scalar modes differ")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._check(other)
        return self._wrap(self.data @ other.data)

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._check(other)
        return self._wrap(self.data + other.data)

    def __sub__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._check(other)
        return self._wrap(self.data - other.data)

    def __neg__(self) -> "ComplexMatrix":
        return self._wrap(-self.data)

    def scale(self, c) -> "ComplexMatrix":
        return self._wrap(self.data * to_scalar(c, self.mode))

    def shift(self, c) -> "ComplexMatrix":
        """Return ``M - c E``."""
        return self - ComplexMatrix.identity(self.n, self.mode).scale(c)

    def conj(self) -> "ComplexMatrix":
        if self.mode is Mode.FLOAT:
            return self._wrap(self.data.conj())
        return self._wrap(np.vectorize(lambda x: x.conjugate(), otypes=[object])(self.data))

    def transpose(self) -> "ComplexMatrix":
        return self._wrap(self.data.T.copy())

    def to_float(self) -> "ComplexMatrix":
        if self.mode is Mode.FLOAT:
            return self
        return ComplexMatrix(_freeze(self.data.astype(np.complex128)), Mode.FLOAT)

    def as_complex(self) -> np.ndarray:
        """Writable complex128 copy of the entries."""
        return self.data.astype(np.complex128)

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.as_complex()))

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.mode is Mode.RATIONAL:
            return not any(bool(x) for x in self.data.flat)
        return self.frobenius_norm() <= tol

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return (self.mode is other.mode and self.n == other.n
                and bool(np.all(self.data == other.data)))

    def __hash__(self):
        return hash((self.mode, self.n, tuple(self.data.flat)))

    def __repr__(self):
        return f"ComplexMatrix(n={self.n}, mode={self.mode.value}, data={self.data.tolist()!r})"


@dataclass(frozen=True, eq=False)
class MatVector:
    """Row-major flattening of an N x N matrix (length N**2)."""

    components: np.ndarray
    mode: Mode = Mode.FLOAT

    @property
    def dim(self) -> int:
        return self.components.shape[0]

    def __eq__(self, other):
        if not isinstance(other, MatVector):
            return NotImplemented
        return (self.mode is other.mode and self.dim == other.dim
                and bool(np.all(self.components == other.components)))

    __hash__ = None


def vectorize(m: ComplexMatrix) -> MatVector:
    """Flatten ``m`` row by row: component ``j*N + k`` is entry ``(j, k)``."""
    return MatVector(_freeze(m.data.reshape(-1).copy()), m.mode)


def devectorize(v: MatVector) -> ComplexMatrix:
    n = int(round(np.sqrt(v.dim)))
    if n * n != v.dim:
        raise ValueError(f"vector length {v.dim} is not a perfect square")
    return ComplexMatrix(_freeze(v.components.reshape(n, n).copy()), v.mode)


def mat_power(m: ComplexMatrix, n: int) -> ComplexMatrix:
    """``m**n`` by repeated squaring; ``m**0`` is the identity."""
    if n < 0:
        raise ValueError("negative power")
    result = ComplexMatrix.identity(m.n, m.mode)
    base = m
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def frobenius_inner(a: MatVector, b: MatVector):
    """Sesquilinear inner product ``sum(conj(a_i) * b_i)``."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if a.mode is not b.mode:
        raise ValueError("scalar modes differ")
    if a.mode is Mode.FLOAT:
        return complex(np.vdot(a.components, b.components))
    acc = GaussRational(0)
    for x, y in zip(a.components, b.components):
        acc = acc + x.conjugate() * y
    return acc


def _magnitude_key(mode: Mode):
    if mode is Mode.FLOAT:
        return abs
    return lambda x: x.abs2()


def kernel_basis(m: ComplexMatrix, tol: float = DEFAULT_TOL, scale: float | None = None) -> list[np.ndarray]:
    """Null-space basis of ``m`` by Gauss-Jordan elimination with complete pivoting.

    In float mode pivots not exceeding ``tol * scale`` count as zero and the
    returned vectors are orthonormal; ``scale`` defaults to ``||m||_F``. For a
    shifted matrix ``M - lambda E`` pass ``||M||_F``, since the shifted norm
    can itself be rounding noise. In rational mode zero tests are exact,
    ``tol`` is ignored, and the basis is returned unnormalized.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    n = m.n
    mode = m.mode
    a = m.data.copy()
    if mode is Mode.FLOAT:
        a = np.array(a, dtype=np.complex128)
        thresh = tol * (m.frobenius_norm() if scale is None else scale)
    else:
        thresh = 0
    key = _magnitude_key(mode)
    cols = list(range(n))
    rank = 0
    for r in range(n):
        best, bi, bj = None, -1, -1
        for i in range(r, n):
            for j in range(r, n):
                v = key(a[i, j])
                if best is None or v > best:
                    best, bi, bj = v, i, j
        if best is None or best <= thresh:
            break
        if bi != r:
            a[[r, bi], :] = a[[bi, r], :]
        if bj != r:
            a[:, [r, bj]] = a[:, [bj, r]]
            cols[r], cols[bj] = cols[bj], cols[r]
        piv = a[r, r]
        a[r, :] = a[r, :] / piv
        for i in range(n):
            if i != r:
                f = a[i, r]
                if mode is Mode.FLOAT or f:
                    a[i, :] = a[i, :] - f * a[r, :]
        rank += 1

    basis = []
    for f in range(rank, n):
        if mode is Mode.FLOAT:
            x = np.zeros(n, dtype=np.complex128)
            x[cols[f]] = 1.0
        else:
            x = np.array([GaussRational(0) for _ in range(n)], dtype=object)
            x[cols[f]] = GaussRational(1)
        for r in range(rank):
            x[cols[r]] = -a[r, f]
        basis.append(x)

    if mode is Mode.FLOAT and basis:
        q, _ = np.linalg.qr(np.column_stack(basis))
        basis = [_freeze(q[:, i].copy()) for i in range(q.shape[1])]
    else:
        basis = [_freeze(x) for x in basis]
    return basis
