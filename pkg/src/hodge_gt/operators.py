"""Invariant operators on Clifford-valued polynomials.

Every operator takes an optional ``n``: it then acts with respect to the
first ``n`` coordinates only (the underlined operators on R^(n) inside a
larger ambient space).  ``n=None`` means all coordinates.

Sign convention: ``x^2`` is the Clifford square ``-|x|^2``.  All even
powers ``x^(2j)`` below are multiplication by ``(-|x|^2)^j``.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .clifford import blade_product
from .mvpoly import MVPolynomial, mul
from .scalar import Scalar


def _n(p: MVPolynomial, n: int | None) -> int:
    if n is None:
        return p.dim
    if not 0 <= n <= p.dim:
        raise ValueError(f"n={n} out of range for dimension {p.dim}")
    return n


def _accumulate(out: dict, key, v):
    prev = out.get(key)
    if prev is None:
        out[key] = v
    else:
        v = prev + v
        if v:
            out[key] = v
        else:
            del out[key]


def _dirac_part(p: MVPolynomial, n, keep: Callable[[int, int], bool]) -> MVPolynomial:
    n = _n(p, n)
    out: dict = {}
    for (e, b), c in p._terms.items():
        for j in range(n):
            a = e[j]
            bit = 1 << j
            if not a or not keep(bit, b):
                continue
            sign, blade = blade_product(bit, b)
            ne = e[:j] + (a - 1,) + e[j + 1:]
            v = c * (a if sign > 0 else -a)
            _accumulate(out, (ne, blade), v)
    return MVPolynomial._make(p.dim, out)


def _always(bit, b):
    return True


def _wedge(bit, b):
    return not bit & b


def _bullet(bit, b):
    return bool(bit & b)


def dirac(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    """sum_j e_j d/dx_j p (left multiplication)."""
    return _dirac_part(p, n, _always)


def dirac_plus(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    return _dirac_part(p, n, _wedge)


def dirac_minus(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    return _dirac_part(p, n, _bullet)


def _x_part(p: MVPolynomial, n, keep) -> MVPolynomial:
    n = _n(p, n)
    out: dict = {}
    for (e, b), c in p._terms.items():
        for j in range(n):
            bit = 1 << j
            if not keep(bit, b):
                continue
            sign, blade = blade_product(bit, b)
            ne = e[:j] + (e[j] + 1,) + e[j + 1:]
            _accumulate(out, (ne, blade), c if sign > 0 else -c)
    return MVPolynomial._make(p.dim, out)


def x_mult(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    """Left multiplication by the vector variable."""
    return _x_part(p, n, _always)


def x_wedge(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    return _x_part(p, n, _wedge)


def x_bullet(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    return _x_part(p, n, _bullet)


def euler(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    n = _n(p, n)
    out = {}
    for (e, b), c in p._terms.items():
        d = sum(e[:n])
        if d:
            out[(e, b)] = c * d
    return MVPolynomial._make(p.dim, out)


def _fermi(p: MVPolynomial, n, first, second) -> MVPolynomial:
    # -sum_j (e_j second)(e_j first), applied term by term
    n = _n(p, n)
    out: dict = {}
    for (e, b), c in p._terms.items():
        for j in range(n):
            bit = 1 << j
            if not first(bit, b):
                continue
            s1, b1 = blade_product(bit, b)
            if not second(bit, b1):
                continue
            s2, b2 = blade_product(bit, b1)
            _accumulate(out, (e, b2), c if s1 * s2 < 0 else -c)
    return MVPolynomial._make(p.dim, out)


def fermi_plus(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    """-sum_j (e_j ^)(e_j .); acts as s on grade-s input."""
    return _fermi(p, n, _bullet, _wedge)


def fermi_minus(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    """-sum_j (e_j .)(e_j ^); acts as (n - s) on grade-s input."""
    return _fermi(p, n, _wedge, _bullet)


def op_A(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    return euler(p, n) + fermi_plus(p, n)


def op_B(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    return euler(p, n) + fermi_minus(p, n)


def laplacian(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    n = _n(p, n)
    out: dict = {}
    for (e, b), c in p._terms.items():
        for j in range(n):
            a = e[j]
            if a >= 2:
                ne = e[:j] + (a - 2,) + e[j + 1:]
                _accumulate(out, (ne, b), c * (a * (a - 1)))
    return MVPolynomial._make(p.dim, out)


def x_power(p: MVPolynomial, power: int, n: int | None = None) -> MVPolynomial:
    """Left multiplication by the Clifford power x^power."""
    if power < 0:
        raise ValueError("negative power")
    n = _n(p, n)
    if power >= 2:
        r2 = MVPolynomial.radius_squared(p.dim, n)
        p = mul((-r2) ** (power // 2), p)
    if power % 2:
        p = x_mult(p, n)
    return p


_LETTERS = {"wedge": x_wedge, "^": x_wedge, "∧": x_wedge,
            "bullet": x_bullet, ".": x_bullet, "•": x_bullet}


def apply_word(word: Sequence[str], p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    """Apply a word in (x^), (x.) written left to right; the rightmost letter acts first."""
    if not word:
        raise ValueError("word must be non-empty")
    for letter in reversed(word):
        try:
            f = _LETTERS[letter]
        except KeyError:
            raise ValueError(f"unknown letter {letter!r}") from None
        p = f(p, n)
    return p


# -- composable operator expressions ------------------------------------------------

class Operator:
    """A linear map MVPolynomial -> MVPolynomial, composable with ``@``.

    ``S @ T`` applies T first.  ``c * T`` scales, ``S + T`` adds pointwise.
    """

    __slots__ = ("fn", "name")

    def __init__(self, fn: Callable[[MVPolynomial], MVPolynomial], name: str):
        self.fn = fn
        self.name = name

    def __call__(self, p: MVPolynomial) -> MVPolynomial:
        return self.fn(p)

    def __matmul__(self, other: "Operator") -> "Operator":
        f, g = self.fn, other.fn
        return Operator(lambda p: f(g(p)), f"{self.name}{other.name}")

    def __add__(self, other: "Operator") -> "Operator":
        f, g = self.fn, other.fn
        return Operator(lambda p: f(p) + g(p), f"({self.name} + {other.name})")

    def __sub__(self, other: "Operator") -> "Operator":
        f, g = self.fn, other.fn
        return Operator(lambda p: f(p) - g(p), f"({self.name} - {other.name})")

    def __neg__(self) -> "Operator":
        f = self.fn
        return Operator(lambda p: -f(p), f"-{self.name}")

    def __rmul__(self, c) -> "Operator":
        c = Scalar.coerce(c)
        f = self.fn
        return Operator(lambda p: f(p).scale(c), f"{c}*{self.name}")

    def __mul__(self, c) -> "Operator":
        if isinstance(c, Operator):
            return self @ c
        return self.__rmul__(c)

    def __repr__(self):
        return f"Operator({self.name})"

    # atoms
    @staticmethod
    def identity() -> "Operator":
        return Operator(lambda p: p, "1")

    @staticmethod
    def constant(c) -> "Operator":
        c = Scalar.coerce(c)
        return Operator(lambda p: p.scale(c), str(c))

    @staticmethod
    def multiply(q: MVPolynomial, name: str = "q") -> "Operator":
        return Operator(lambda p: mul(q, p), name)

    @staticmethod
    def dirac(n=None):
        return Operator(lambda p: dirac(p, n), "D")

    @staticmethod
    def dirac_plus(n=None):
        return Operator(lambda p: dirac_plus(p, n), "D+")

    @staticmethod
    def dirac_minus(n=None):
        return Operator(lambda p: dirac_minus(p, n), "D-")

    @staticmethod
    def x(n=None):
        return Operator(lambda p: x_mult(p, n), "x")

    @staticmethod
    def x_wedge(n=None):
        return Operator(lambda p: x_wedge(p, n), "(x^)")

    @staticmethod
    def x_bullet(n=None):
        return Operator(lambda p: x_bullet(p, n), "(x.)")

    @staticmethod
    def x_power(power: int, n=None):
        return Operator(lambda p: x_power(p, power, n), f"x^{power}")

    @staticmethod
    def euler(n=None):
        return Operator(lambda p: euler(p, n), "E")

    @staticmethod
    def fermi_plus(n=None):
        return Operator(lambda p: fermi_plus(p, n), "D+|")

    @staticmethod
    def fermi_minus(n=None):
        return Operator(lambda p: fermi_minus(p, n), "D-|")

    @staticmethod
    def A(n=None):
        return Operator(lambda p: op_A(p, n), "A")

    @staticmethod
    def B(n=None):
        return Operator(lambda p: op_B(p, n), "B")

    @staticmethod
    def laplacian(n=None):
        return Operator(lambda p: laplacian(p, n), "Lap")

    @staticmethod
    def word(letters: Sequence[str], n=None):
        letters = tuple(letters)
        return Operator(lambda p: apply_word(letters, p, n), "".join(f"(x{l})" for l in letters))


def commutator(T: Operator, S: Operator) -> Operator:
    return T @ S - S @ T


def anticommutator(T: Operator, S: Operator) -> Operator:
    return T @ S + S @ T


def y_plus(j: int, n=None) -> Operator:
    """x^(2j+1) ((x.)(A + 2j + 2) + (x^) A): maps H^s_(k-2j-2) into Ker D+."""
    O = Operator
    shift = O.A(n) + O.constant(2 * j + 2)
    return O.x_power(2 * j + 1, n) @ (O.x_bullet(n) @ shift + O.x_wedge(n) @ O.A(n))


def y_minus(j: int, n=None) -> Operator:
    """x^(2j+1) ((x^)(B + 2j + 2) + (x.) B): maps H^s_(k-2j-2) into Ker D-."""
    O = Operator
    shift = O.B(n) + O.constant(2 * j + 2)
    return O.x_power(2 * j + 1, n) @ (O.x_wedge(n) @ shift + O.x_bullet(n) @ O.B(n))
