"""Scalar fields: complex doubles and exact Gaussian rationals."""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational


class Mode(str, enum.Enum):
    FLOAT = "float"
    RATIONAL = "rational"


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        # exact binary value of the float, no decimal rounding
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class GaussRational:
    """Complex number with rational real and imaginary parts.

    Arithmetic is exact. Mixed operations with ``int`` and ``Fraction``
    are supported; mixing with ``float``/``complex`` raises ``TypeError``
    so that inexact values never leak into an exact computation.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x)

    def _other(self, other):
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        return GaussRational((self.re * o.re + self.im * o.im) / d,
                             (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Exact squared modulus."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return abs(complex(self))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


def to_scalar(x, mode: Mode):
    """Convert a Python number to the scalar type of ``mode``."""
    if mode is Mode.FLOAT:
        return complex(x)
    return GaussRational.coerce(x)


def zero(mode: Mode):
    return 0j if mode is Mode.FLOAT else GaussRational(0)


def one(mode: Mode):
    return 1 + 0j if mode is Mode.FLOAT else GaussRational(1)


def magnitude(x) -> float:
    return abs(complex(x))
