"""Sparse Clifford-valued polynomials in commuting variables x_1..x_m.

A term is keyed by ``(exponents, blade)``; variables commute with every
blade, only the coefficients carry Clifford structure.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .clifford import Multivector, blade_indices, blade_mask, blade_product, grade_of
from .scalar import ONE, ZERO, I, Scalar

Key = tuple  # (exps: tuple[int, ...], blade: int)


def term_order(key: Key):
    """Canonical order: degree, then lex (x1 first) on exponents, then blade."""
    exps, blade = key
    return (sum(exps), tuple(-e for e in exps), grade_of(blade), blade)


class MVPolynomial:
    """Cl(0,m)-valued polynomial with exact coefficients.

    Values are treated as immutable; every operation returns a new object.
    """

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[Key, object] | None = None):
        self.dim = dim
        clean = {}
        for (exps, blade), c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != dim or min(exps, default=0) < 0:
                raise ValueError(f"bad exponent vector {exps} for dimension {dim}")
            if not 0 <= blade < (1 << dim):
                raise ValueError(f"blade {blade:b} outside Cl(0,{dim})")
            c = Scalar.coerce(c)
            if c:
                key = (exps, blade)
                v = clean.get(key)
                v = c if v is None else v + c
                if v:
                    clean[key] = v
                else:
                    del clean[key]
        self._terms = clean

    @classmethod
    def _make(cls, dim, terms):
        p = object.__new__(cls)
        p.dim = dim
        p._terms = terms
        return p

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, dim: int) -> "MVPolynomial":
        return cls._make(dim, {})

    @classmethod
    def constant(cls, dim: int, value=1) -> "MVPolynomial":
        """Constant polynomial; ``value`` may be a scalar or a Multivector."""
        zero = (0,) * dim
        if isinstance(value, Multivector):
            if value.dim != dim:
                raise ValueError("dimension mismatch")
            return cls._make(dim, {(zero, b): c for b, c in value.terms.items()})
        c = Scalar.coerce(value)
        return cls._make(dim, {(zero, 0): c} if c else {})

    @classmethod
    def var(cls, dim: int, j: int) -> "MVPolynomial":
        """The coordinate function x_j (1-based)."""
        if not 1 <= j <= dim:
            raise ValueError(f"x_{j} does not exist in dimension {dim}")
        exps = [0] * dim
        exps[j - 1] = 1
        return cls._make(dim, {(tuple(exps), 0): ONE})

    @classmethod
    def blade(cls, dim: int, indices: Iterable[int], c=1) -> "MVPolynomial":
        return cls.constant(dim, Multivector.blade(dim, indices, c))

    @classmethod
    def vector_variable(cls, dim: int, n: int | None = None) -> "MVPolynomial":
        """x = x_1 e_1 + ... + x_n e_n (n defaults to dim)."""
        n = dim if n is None else n
        terms = {}
        for j in range(n):
            exps = [0] * dim
            exps[j] = 1
            terms[(tuple(exps), 1 << j)] = ONE
        return cls._make(dim, terms)

    @classmethod
    def radius_squared(cls, dim: int, n: int | None = None) -> "MVPolynomial":
        """x_1^2 + ... + x_n^2."""
        n = dim if n is None else n
        terms = {}
        for j in range(n):
            exps = [0] * dim
            exps[j] = 2
            terms[(tuple(exps), 0)] = ONE
        return cls._make(dim, terms)

    # -- inspection ------------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: term_order(kv[0]))

    def keys(self):
        return self._terms.keys()

    def coefficient(self, exps: Sequence[int], blade: int = 0) -> Scalar:
        return self._terms.get((tuple(exps), blade), ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e, _ in self._terms}

    def grades(self) -> set[int]:
        return {grade_of(b) for _, b in self._terms}

    def is_homogeneous(self, k: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return k is None or degs == {k}

    def is_grade(self, s: int) -> bool:
        return all(grade_of(b) == s for _, b in self._terms)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def uses_var(self, j: int) -> bool:
        return any(e[j - 1] for e, _ in self._terms)

    def uses_generator(self, i: int) -> bool:
        bit = 1 << (i - 1)
        return any(b & bit for _, b in self._terms)

    def leading(self):
        """(key, coefficient) of the first term in canonical order, or None."""
        if not self._terms:
            return None
        key = min(self._terms, key=term_order)
        return key, self._terms[key]

    # -- ring operations ----------------------------------------------------------
    def _check(self, other: "MVPolynomial"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def _coerce(self, other) -> "MVPolynomial":
        if isinstance(other, MVPolynomial):
            self._check(other)
            return other
        return MVPolynomial.constant(self.dim, other)

    def __add__(self, other):
        other = self._coerce(other)
        if len(other._terms) > len(self._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return MVPolynomial._make(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return MVPolynomial._make(self.dim, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MVPolynomial":
        c = Scalar.coerce(c)
        if not c:
            return MVPolynomial._make(self.dim, {})
        if c == ONE:
            return self
        return MVPolynomial._make(self.dim, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, MVPolynomial):
            return mul(self, other)
        if isinstance(other, Multivector):
            return mul(self, MVPolynomial.constant(self.dim, other))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return mul(MVPolynomial.constant(self.dim, other), self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = MVPolynomial.constant(self.dim, 1)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, c):
        return self.scale(Scalar.coerce(c).inverse())

    def __eq__(self, other):
        if isinstance(other, MVPolynomial):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    # -- coefficient-wise maps -------------------------------------------------
    def conjugate(self) -> "MVPolynomial":
        """Complex conjugation of every coefficient."""
        return MVPolynomial._make(self.dim, {k: c.conjugate() for k, c in self._terms.items()})

    def real_part(self) -> "MVPolynomial":
        return MVPolynomial._make(
            self.dim, {k: Scalar._raw(c.re, ZERO.im) for k, c in self._terms.items() if c.re}
        )

    def imag_part(self) -> "MVPolynomial":
        return MVPolynomial._make(
            self.dim, {k: Scalar._raw(c.im, ZERO.im) for k, c in self._terms.items() if c.im}
        )

    def grade_part(self, s: int) -> "MVPolynomial":
        return MVPolynomial._make(
            self.dim, {k: c for k, c in self._terms.items() if grade_of(k[1]) == s}
        )

    def degree_part(self, d: int) -> "MVPolynomial":
        return MVPolynomial._make(
            self.dim, {k: c for k, c in self._terms.items() if sum(k[0]) == d}
        )

    # -- calculus / substitution ---------------------------------------------------
    def partial(self, j: int) -> "MVPolynomial":
        return partial_derivative(self, j)

    def restrict_last(self) -> "MVPolynomial":
        return restrict_last(self)

    def split_em(self):
        return split_em(self)

    def evaluate(self, point):
        return evaluate(self, point)

    def embed(self, new_dim: int) -> "MVPolynomial":
        return embed(self, new_dim)

    # -- io ----------------------------------------------------------------------
    def to_json(self, algebra: str | None = None) -> dict:
        if algebra is None:
            algebra = "real" if self.is_real() else "complex"
        if algebra == "real" and not self.is_real():
            raise ValueError("real-mode polynomial has imaginary coefficients")
        return {
            "dim": self.dim,
            "algebra": algebra,
            "terms": [
                {"exps": list(e), "blade": blade_indices(b), **c.json_parts()}
                for (e, b), c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MVPolynomial":
        dim = int(data["dim"])
        terms = {}
        for t in data["terms"]:
            key = (tuple(int(e) for e in t["exps"]), blade_mask(t["blade"]))
            if key in terms:
                raise ValueError(f"duplicate term {key}")
            terms[key] = Scalar.parse(t["re"], t.get("im"))
        p = cls(dim, terms)
        if data.get("algebra", "complex") == "real" and not p.is_real():
            raise ValueError("real-mode polynomial has imaginary coefficients")
        return p

    def __repr__(self):
        from .render import to_text

        return to_text(self)


# -- free functions -------------------------------------------------------------------

def mul(p: MVPolynomial, q: MVPolynomial) -> MVPolynomial:
    """Product; coefficients multiply with the geometric product."""
    p._check(q)
    out: dict = {}
    qt = list(q._terms.items())
    for (ea, ba), ca in p._terms.items():
        for (eb, bb), cb in qt:
            sign, blade = blade_product(ba, bb)
            key = (tuple(x + y for x, y in zip(ea, eb)), blade)
            v = ca * cb
            if sign < 0:
                v = -v
            prev = out.get(key)
            out[key] = v if prev is None else prev + v
    return MVPolynomial._make(p.dim, {k: v for k, v in out.items() if v})


def partial_derivative(p: MVPolynomial, j: int) -> MVPolynomial:
    if not 1 <= j <= p.dim:
        raise ValueError(f"no variable x_{j} in dimension {p.dim}")
    i = j - 1
    out = {}
    for (e, b), c in p._terms.items():
        a = e[i]
        if a:
            ne = e[:i] + (a - 1,) + e[i + 1:]
            out[(ne, b)] = c * a
    return MVPolynomial._make(p.dim, out)


def restrict_last(p: MVPolynomial) -> MVPolynomial:
    """Substitute x_m = 0 (ambient dimension is kept)."""
    return MVPolynomial._make(
        p.dim, {k: c for k, c in p._terms.items() if k[0][-1] == 0}
    )


def split_em(p: MVPolynomial) -> tuple[MVPolynomial, MVPolynomial]:
    """Write ``p = u + v e_m`` with u, v free of the generator e_m.

    Requires p to be free of the variable x_m.
    """
    m = p.dim
    if p.uses_var(m):
        raise ValueError("split_em needs a polynomial free of x_m")
    top = 1 << (m - 1)
    u, v = {}, {}
    for (e, b), c in p._terms.items():
        if b & top:
            rest = b ^ top
            sign, check = blade_product(rest, top)
            assert check == b
            v[(e, rest)] = c if sign > 0 else -c
        else:
            u[(e, b)] = c
    return MVPolynomial._make(m, u), MVPolynomial._make(m, v)


def evaluate(p: MVPolynomial, point: Sequence) -> Multivector:
    if len(point) != p.dim:
        raise ValueError(f"point has {len(point)} coordinates, expected {p.dim}")
    xs = [Scalar.coerce(x) for x in point]
    out: dict[int, Scalar] = {}
    for (e, b), c in p._terms.items():
        v = c
        for x, a in zip(xs, e):
            if a:
                v = v * x ** a
        if v:
            out[b] = out[b] + v if b in out else v
    return Multivector(p.dim, out)


def embed(p: MVPolynomial, new_dim: int) -> MVPolynomial:
    if new_dim < p.dim:
        raise ValueError("embed cannot shrink the ambient dimension")
    pad = (0,) * (new_dim - p.dim)
    return MVPolynomial._make(new_dim, {(e + pad, b): c for (e, b), c in p._terms.items()})


# -- dimension-2 shorthands ---------------------------------------------------------

def z(dim: int, sign: int = 1, power: int = 1) -> MVPolynomial:
    """(x_1 + sign*i*x_2)^power."""
    base = MVPolynomial.var(dim, 1) + MVPolynomial.var(dim, 2).scale(I if sign > 0 else -I)
    return base ** power


def w(dim: int, sign: int = 1) -> MVPolynomial:
    """e_1 + sign*i*e_2."""
    return MVPolynomial.blade(dim, [1]) + MVPolynomial.blade(dim, [2]).scale(I if sign > 0 else -I)
