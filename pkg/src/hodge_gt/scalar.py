"""Exact Gaussian-rational scalars.

A :class:`Scalar` is ``re + i*im`` with both parts held as ``gmpy2.mpq``
(always reduced, positive denominator).  Floats are refused everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral

from gmpy2 import mpq

_MPQ = type(mpq(0))
_ZERO = mpq(0)


def to_rational(x) -> "mpq":
    """Coerce an exact rational-like value to ``mpq``."""
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, Integral):
        return mpq(int(x))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x.strip())
    if type(x).__name__ == "mpz":
        return mpq(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Scalar:
    """Element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = to_rational(re)
        self.im = to_rational(im)

    @classmethod
    def _raw(cls, re, im):
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls._raw(to_rational(x), _ZERO)

    @classmethod
    def parse(cls, re: str, im: str | None = None) -> "Scalar":
        return cls(re, im if im is not None else 0)

    # -- predicates -------------------------------------------------------
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return Scalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return Scalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return Scalar._raw(a * c, _ZERO)
            return Scalar._raw(a * c, a * d)
        if not d:
            return Scalar._raw(a * c, b * c)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm2(self) -> "mpq":
        """|z|^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "Scalar":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar._raw(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Scalar":
        return Scalar._raw(self.re, -self.im)

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_positive(self) -> bool:
        """True for a real, strictly positive value."""
        return not self.im and self.re > 0

    # -- formatting ---------------------------------------------------------
    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"

    def json_parts(self) -> dict:
        out = {"re": str(self.re)}
        if self.im:
            out["im"] = str(self.im)
        return out


def _imag_str(q) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{q}i"


ZERO = Scalar._raw(mpq(0), mpq(0))
ONE = Scalar._raw(mpq(1), mpq(0))
I = Scalar._raw(mpq(0), mpq(1))
