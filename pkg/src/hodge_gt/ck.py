"""Cauchy-Kovalevskaya extension from the hyperplane x_m = 0.

Two independent routes:

* ``ck_extend_generic``: the finite series sum_j x_m^j/j! (e_m D)^j p0,
  valid for any x_m-free homogeneous p0.
* ``ck_extend_hodge``: the closed recursion for initial data
  u0 + v0 e_m with D+ u0 = 0 and D- v0 = 0 (D = Dirac on R^(m-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from gmpy2 import mpq

from .mvpoly import MVPolynomial, mul, restrict_last, split_em
from .operators import dirac, dirac_minus, dirac_plus


class CompatibilityError(ValueError):
    """Initial data violate D+ u0 = 0 / D- v0 = 0 (or p is not in H_k^s)."""


def _times_xm_power(p: MVPolynomial, j: int, c) -> MVPolynomial:
    """c * x_m^j * p for x_m-free p."""
    if not j:
        return p.scale(c)
    out = {}
    for (e, b), v in p._terms.items():
        out[(e[:-1] + (e[-1] + j,), b)] = v * c
    return MVPolynomial._make(p.dim, {k: v for k, v in out.items() if v})


def _right_em(p: MVPolynomial) -> MVPolynomial:
    return mul(p, MVPolynomial.blade(p.dim, [p.dim]))


def ck_extend_generic(p0: MVPolynomial, m: int | None = None) -> MVPolynomial:
    """Series CK extension of an x_m-free homogeneous polynomial."""
    if m is not None and m != p0.dim:
        p0 = p0.embed(m)
    m = p0.dim
    if p0.uses_var(m):
        raise ValueError("initial polynomial must not depend on x_m")
    if not p0.is_homogeneous():
        raise ValueError("initial polynomial must be homogeneous")
    if not p0:
        return p0
    (k,) = p0.degrees()
    em = MVPolynomial.blade(m, [m])
    out = p0
    pj = p0
    for j in range(1, k + 1):
        pj = mul(em, dirac(pj, m - 1))
        if not pj:
            break
        out = out + _times_xm_power(pj, j, mpq(1, factorial(j)))
    return out


@dataclass(frozen=True)
class InitialDatum:
    """Initial polynomial u0 + v0 e_m on the hyperplane x_m = 0.

    u0 (grade s) and v0 (grade s-1) live in ambient dimension m but use
    neither x_m nor e_m.
    """

    u0: MVPolynomial
    v0: MVPolynomial
    s: int
    k: int
    m: int

    def __post_init__(self):
        for name in ("u0", "v0"):
            if getattr(self, name).dim != self.m:
                raise ValueError(f"{name} must have ambient dimension {self.m}")

    def problems(self) -> list[str]:
        out = []
        m, s, k = self.m, self.s, self.k
        for name, p, g in (("u0", self.u0, s), ("v0", self.v0, s - 1)):
            if not p:
                continue
            if not p.is_homogeneous(k):
                out.append(f"{name} is not homogeneous of degree {k}")
            if not p.is_grade(g):
                out.append(f"{name} is not of grade {g}")
            if p.uses_var(m) or p.uses_generator(m):
                out.append(f"{name} depends on x_{m} or e_{m}")
        if dirac_plus(self.u0, m - 1):
            out.append("D+ u0 != 0")
        if dirac_minus(self.v0, m - 1):
            out.append("D- v0 != 0")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def polynomial(self) -> MVPolynomial:
        """u0 + v0 e_m."""
        return self.u0 + _right_em(self.v0)


def is_in_Iks(u0: MVPolynomial, v0: MVPolynomial, s: int, k: int) -> bool:
    return InitialDatum(u0, v0, s, k, u0.dim).is_valid()


def ck_extend_hodge(d: InitialDatum) -> MVPolynomial:
    """Closed-form CK extension of Hodge-de Rham initial data."""
    probs = d.problems()
    if probs:
        raise CompatibilityError("; ".join(probs))
    m, s, k = d.m, d.s, d.k
    n = m - 1
    sign = 1 if (s - 1) % 2 == 0 else -1
    u_sum = d.u0
    v_sum = d.v0
    u_even, v_even = d.u0, d.v0  # (D+D-)^t u0 and (D-D+)^t v0
    fact = 1
    for j in range(1, k + 1):
        fact *= j
        if j % 2:
            u_j = dirac_plus(v_even, n).scale(sign)
            v_j = dirac_minus(u_even, n).scale(sign)
        else:
            u_even = dirac_plus(dirac_minus(u_even, n), n)
            v_even = dirac_minus(dirac_plus(v_even, n), n)
            u_j, v_j = u_even, v_even
        if not u_j and not v_j and not u_even and not v_even:
            break
        u_sum = u_sum + _times_xm_power(u_j, j, mpq(1, fact))
        v_sum = v_sum + _times_xm_power(v_j, j, mpq(1, fact))
    return u_sum + _right_em(v_sum)


def restrict_to_initial(p: MVPolynomial, s: int | None = None, k: int | None = None) -> InitialDatum:
    """Initial datum of p in H_k^s(R^m): split p(x, 0) = u0 + v0 e_m and check it."""
    m = p.dim
    if s is None:
        grades = p.grades()
        if len(grades) > 1:
            raise CompatibilityError("p is not of a single grade")
        s = grades.pop() if grades else 0
    if k is None:
        degs = p.degrees()
        if len(degs) > 1:
            raise CompatibilityError("p is not homogeneous")
        k = degs.pop() if degs else 0
    if not p.is_grade(s) or not p.is_homogeneous(k):
        raise CompatibilityError(f"p is not in P_{k}^{s}")
    if dirac(p):
        raise CompatibilityError("p is not monogenic")
    u0, v0 = split_em(restrict_last(p))
    d = InitialDatum(u0, v0, s, k, m)
    probs = d.problems()
    if probs:
        raise CompatibilityError("; ".join(probs))
    return d


def ck_chain(p0: MVPolynomial, s: int, k: int) -> list[tuple[MVPolynomial, MVPolynomial]]:
    """[(u_j, v_j)] with (e_m D)^j p0 = u_j + v_j e_m, j = 0..k."""
    m = p0.dim
    em = MVPolynomial.blade(m, [m])
    out = []
    pj = p0
    for _ in range(k + 1):
        out.append(split_em(pj))
        pj = mul(em, dirac(pj, m - 1))
    return out
