"""Exact real/complex Clifford algebra Cl(0, m).

Blades are bitmasks: bit ``i-1`` set means the generator ``e_i`` occurs.
Generators anticommute and square to ``-1``.  Consequently, for a vector
``x = sum x_i e_i`` the Clifford square ``x*x`` equals ``-|x|^2``; every
formula downstream that mentions an even power of ``x`` means this
(negative) scalar.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .scalar import ONE, Scalar


# -- blades --------------------------------------------------------------

def blade_mask(indices: Iterable[int]) -> int:
    """Bitmask of a blade given by 1-based generator indices (any order, no repeats)."""
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator index {i}")
        mask |= bit
    return mask


def blade_indices(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def grade_of(mask: int) -> int:
    return bin(mask).count("1")


@lru_cache(maxsize=None)
def blade_product(a: int, b: int) -> tuple[int, int]:
    """``e_a * e_b = sign * e_(a^b)``; returns ``(sign, a ^ b)``.

    The sign counts the transpositions needed to sort the concatenated
    index list, times ``-1`` per repeated index.
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += bin(x & b).count("1")
        x >>= 1
    swaps += bin(a & b).count("1")
    return (-1 if swaps & 1 else 1), a ^ b


def conj_sign(grade: int) -> int:
    """Clifford conjugation sign on grade ``s``: ``(-1)^(s(s+1)/2)``."""
    return -1 if (grade * (grade + 1) // 2) & 1 else 1


# -- multivectors ----------------------------------------------------------

class Multivector:
    """Element of Cl(0, m) with exact coefficients, stored sparsely."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[int, object] | None = None):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        self.dim = dim
        clean = {}
        limit = 1 << dim
        for blade, c in (terms or {}).items():
            if not 0 <= blade < limit:
                raise ValueError(f"blade {blade:b} outside Cl(0,{dim})")
            c = Scalar.coerce(c)
            if c:
                clean[blade] = c
        self._terms = clean

    @classmethod
    def _make(cls, dim, terms):
        mv = object.__new__(cls)
        mv.dim = dim
        mv._terms = terms
        return mv

    # constructors
    @classmethod
    def scalar(cls, dim: int, c=1) -> "Multivector":
        return cls(dim, {0: c})

    @classmethod
    def basis_vector(cls, dim: int, i: int) -> "Multivector":
        if not 1 <= i <= dim:
            raise ValueError(f"e_{i} does not exist in dimension {dim}")
        return cls._make(dim, {1 << (i - 1): ONE})

    @classmethod
    def blade(cls, dim: int, indices: Iterable[int], c=1) -> "Multivector":
        """Product ``c * e_{i1} e_{i2} ...`` in the given order (sign-corrected)."""
        out = cls.scalar(dim, c)
        for i in indices:
            out = out * cls.basis_vector(dim, i)
        return out

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: (grade_of(t[0]), t[0]))

    def coefficient(self, blade: int) -> Scalar:
        return self._terms.get(blade, Scalar())

    def grades(self) -> set[int]:
        return {grade_of(b) for b in self._terms}

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def _check(self, other: "Multivector"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.dim, other)
        self._check(other)
        out = dict(self._terms)
        for b, c in other._terms.items():
            v = out.get(b)
            v = c if v is None else v + c
            if v:
                out[b] = v
            else:
                out.pop(b, None)
        return Multivector._make(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._make(self.dim, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Multivector):
            c = Scalar.coerce(other)
            if not c:
                return Multivector._make(self.dim, {})
            return Multivector._make(self.dim, {b: v * c for b, v in self._terms.items()})
        return geometric_product(self, other)

    def __rmul__(self, other):
        c = Scalar.coerce(other)
        if not c:
            return Multivector._make(self.dim, {})
        return Multivector._make(self.dim, {b: c * v for b, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.dim == other.dim and self._terms == other._terms
        try:
            return self == Multivector.scalar(self.dim, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for b, c in self.items():
            name = "e" + "".join(str(i) for i in blade_indices(b)) if b else ""
            cs = str(c)
            if name:
                parts.append(f"({cs})*{name}" if c.im or "/" in cs else f"{cs}*{name}")
            else:
                parts.append(f"({cs})" if c.im else cs)
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "terms": [{"blade": blade_indices(b), **c.json_parts()} for b, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Multivector":
        terms = {}
        for t in data["terms"]:
            terms[blade_mask(t["blade"])] = Scalar.parse(t["re"], t.get("im"))
        return cls(int(data["dim"]), terms)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    a._check(b)
    out: dict[int, Scalar] = {}
    for ba, ca in a._terms.items():
        for bb, cb in b._terms.items():
            sign, blade = blade_product(ba, bb)
            v = ca * cb
            if sign < 0:
                v = -v
            prev = out.get(blade)
            out[blade] = v if prev is None else prev + v
    return Multivector._make(a.dim, {k: v for k, v in out.items() if v})


def _require_vector(u: Multivector):
    if any(grade_of(b) != 1 for b in u._terms):
        raise ValueError("left factor must be a pure 1-vector")


def inner_bullet(u: Multivector, v: Multivector) -> Multivector:
    """``u . v``: the grade-lowering part of ``u v`` for a 1-vector ``u``."""
    _require_vector(u)
    u._check(v)
    out: dict[int, Scalar] = {}
    for bu, cu in u._terms.items():
        for bv, cv in v._terms.items():
            if bu & bv:
                sign, blade = blade_product(bu, bv)
                val = cu * cv if sign > 0 else -(cu * cv)
                out[blade] = out[blade] + val if blade in out else val
    return Multivector._make(u.dim, {k: c for k, c in out.items() if c})


def outer_wedge(u: Multivector, v: Multivector) -> Multivector:
    """``u ^ v``: the grade-raising part of ``u v`` for a 1-vector ``u``."""
    _require_vector(u)
    u._check(v)
    out: dict[int, Scalar] = {}
    for bu, cu in u._terms.items():
        for bv, cv in v._terms.items():
            if not bu & bv:
                sign, blade = blade_product(bu, bv)
                val = cu * cv if sign > 0 else -(cu * cv)
                out[blade] = out[blade] + val if blade in out else val
    return Multivector._make(u.dim, {k: c for k, c in out.items() if c})


def clifford_conjugate(a: Multivector) -> Multivector:
    return Multivector._make(
        a.dim, {b: (c if conj_sign(grade_of(b)) > 0 else -c) for b, c in a._terms.items()}
    )


def hermitian_bar(a: Multivector) -> Multivector:
    """Clifford conjugation composed with complex conjugation of coefficients.

    On real multivectors this is plain Clifford conjugation.
    """
    return Multivector._make(
        a.dim,
        {b: (c.conjugate() if conj_sign(grade_of(b)) > 0 else -c.conjugate())
         for b, c in a._terms.items()},
    )


def scalar_part(a: Multivector) -> Scalar:
    return a.coefficient(0)


def grade_projection(a: Multivector, s: int) -> Multivector:
    if not 0 <= s <= a.dim:
        raise ValueError(f"grade {s} out of range 0..{a.dim}")
    return Multivector._make(a.dim, {b: c for b, c in a._terms.items() if grade_of(b) == s})


def pseudoscalar(m: int) -> Multivector:
    return Multivector._make(m, {(1 << m) - 1: ONE})


def right_mul_eM(a: Multivector) -> Multivector:
    return a * pseudoscalar(a.dim)
