"""Gegenbauer polynomials and the closed-form CK multipliers.

``X_poly(k, j, m)`` is the polynomial with CK(x^j P) = X_poly * P for P
monogenic of degree k on R^(m-1).  The hat/check operators extend this to
the pieces x^(j-1)(x^)P, x^(j-1)(x.)P and the y-factors.  Everything lives
in ambient dimension m; the underlined vector variable uses the first
m - 1 coordinates, and ``ebar`` is the conjugate -e_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from gmpy2 import mpq

from .mvpoly import MVPolynomial, mul
from .operators import Operator, x_bullet, x_mult, x_power, x_wedge
from .scalar import Scalar, to_rational


def pochhammer(nu, j: int):
    """Rising factorial (nu)_j = nu (nu+1) ... (nu+j-1)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    nu = to_rational(nu)
    out = mpq(1)
    for t in range(j):
        out *= nu + t
    return out


def gegenbauer_coefficients(j: int, nu) -> list:
    """Coefficients c_i of C_j^nu(z) = sum_i c_i (2z)^(j-2i), i = 0..j//2."""
    return [
        (-1) ** i * pochhammer(nu, j - i) / (factorial(i) * factorial(j - 2 * i))
        for i in range(j // 2 + 1)
    ]


def gegenbauer_at_zero(j: int, nu):
    if j % 2:
        return mpq(0)
    return gegenbauer_coefficients(j, nu)[-1]


@lru_cache(maxsize=None)
def gegenbauer_homog(j: int, nu, m: int, nvars: int | None = None) -> MVPolynomial:
    """r^j C_j^nu(x_n / r), r^2 = x_1^2 + ... + x_n^2, as a polynomial in dimension m.

    ``nvars`` (n) defaults to m; x_n is the distinguished variable.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    n = m if nvars is None else nvars
    if not 1 <= n <= m:
        raise ValueError(f"nvars={n} out of range for dimension {m}")
    xn = MVPolynomial.var(m, n)
    r2 = MVPolynomial.radius_squared(m, n)
    out = MVPolynomial.zero(m)
    for i, c in enumerate(gegenbauer_coefficients(j, nu)):
        if c:
            term = (xn.scale(2) ** (j - 2 * i)) * (r2 ** i)
            out = out + term.scale(c)
    return out


def _ebar(m: int) -> MVPolynomial:
    return MVPolynomial.blade(m, [m], -1)


def mu(k: int, j: int, m: int):
    """Normaliser of X_k^j."""
    nu = mpq(m, 2) + k - 1
    l, odd = divmod(j, 2)
    if not odd:
        c0 = gegenbauer_at_zero(2 * l, nu)
        if not c0:
            raise ValueError(f"X_{k}^{j} undefined for m={m}")
        return 1 / c0
    c0 = gegenbauer_at_zero(2 * l, nu + 1)
    if m + 2 * k - 2 == 0:
        raise ValueError(f"X_{k}^{j} undefined for m={m}")
    return mpq(m + 2 * k + 2 * l - 1, m + 2 * k - 2) / c0


@lru_cache(maxsize=None)
def X_poly(k: int, j: int, m: int) -> MVPolynomial:
    if m < 2:
        raise ValueError("X_poly needs m >= 2")
    if j == 0:
        return MVPolynomial.constant(m, 1)
    if m == 2 and k == 0:
        raise ValueError("X_k^j is undefined for m = 2, k = 0")
    nu = mpq(m, 2) + k - 1
    ratio = mpq(m + 2 * k - 2, m + 2 * k + j - 2)
    ebar = _ebar(m)
    xl = MVPolynomial.vector_variable(m, m - 1)
    inner = gegenbauer_homog(j, nu, m) + gegenbauer_homog(j - 1, nu + 1, m).scale(ratio) * ebar * xl
    return (inner * (ebar ** j)).scale(mu(k, j, m))


@dataclass(frozen=True)
class CKMultiplier:
    """Closed-form multiplier acting on P in H_k^s(R^(m-1)) (or P = Q e_m).

    ``variant`` is one of ``X``, ``Xhat``, ``Xcheck``, ``Yhat``, ``Ycheck``.
    For X/Xhat/Xcheck, ``j`` is the power index; for Y variants the degree
    raise is ``2j + 2``.
    """

    variant: str
    m: int
    k: int
    j: int
    s: int = 0

    @property
    def c(self):
        return mpq(self.s + self.k, self.m - 1 + 2 * self.k)

    def __call__(self, P: MVPolynomial) -> MVPolynomial:
        m, k, j = self.m, self.k, self.j
        n = m - 1
        if self.variant == "X":
            return mul(X_poly(k, j, m), P)
        if self.variant in ("Xhat", "Xcheck"):
            if j < 1:
                raise ValueError("hat/check multipliers need j >= 1")
            low = X_poly(k + 1, j - 1, m)
            rest = mul(X_poly(k, j, m), P) - mul(low, x_mult(P, n))
            if self.variant == "Xhat":
                return mul(low, x_wedge(P, n)) + rest.scale(1 - self.c)
            return mul(low, x_bullet(P, n)) + rest.scale(self.c)
        if self.variant in ("Ycheck", "Yhat"):
            idx = 2 * j + 2
            base = mul(X_poly(k, idx, m), P)
            if self.variant == "Ycheck":
                other = CKMultiplier("Xcheck", m, k, idx, self.s)(P)
                return base.scale(self.s + k) + other.scale(idx)
            other = CKMultiplier("Xhat", m, k, idx, self.s)(P)
            return base.scale(m - 1 - self.s + k) + other.scale(idx)
        raise ValueError(f"unknown multiplier variant {self.variant!r}")

    def initial_factor(self) -> Operator:
        """The operator on R^(m-1) whose CK extension this multiplier realises."""
        n = self.m - 1
        if self.variant == "X":
            return Operator.x_power(self.j, n)
        if self.variant == "Xhat":
            return Operator.x_power(self.j - 1, n) @ Operator.x_wedge(n)
        if self.variant == "Xcheck":
            return Operator.x_power(self.j - 1, n) @ Operator.x_bullet(n)
        if self.variant == "Ycheck":
            return y_check_factor(self.j, self.s, self.k, self.m)
        if self.variant == "Yhat":
            return y_hat_factor(self.j, self.s, self.k, self.m)
        raise ValueError(f"unknown multiplier variant {self.variant!r}")

    def as_operator(self) -> Operator:
        return Operator(self, f"{self.variant}[{self.j}]^({self.s},{self.k})")


def X_hat(j: int, s: int, k: int, m: int) -> CKMultiplier:
    return CKMultiplier("Xhat", m, k, j, s)


def X_check(j: int, s: int, k: int, m: int) -> CKMultiplier:
    return CKMultiplier("Xcheck", m, k, j, s)


def Y_check(j: int, s: int, k: int, m: int) -> CKMultiplier:
    return CKMultiplier("Ycheck", m, k, j, s)


def Y_hat(j: int, s: int, k: int, m: int) -> CKMultiplier:
    return CKMultiplier("Yhat", m, k, j, s)


def y_check_factor(j: int, s: int, k: int, m: int) -> Operator:
    """x^(2j+1)((s+k+2j+2)(x.) + (s+k)(x^)) on R^(m-1); lands in Ker D+."""
    n = m - 1

    def apply(P):
        inner = x_bullet(P, n).scale(s + k + 2 * j + 2) + x_wedge(P, n).scale(s + k)
        return x_power(inner, 2 * j + 1, n)

    return Operator(apply, f"ycheck[{2 * j + 2}]")


def y_hat_factor(j: int, s: int, k: int, m: int) -> Operator:
    """x^(2j+1)((m+1-s+k+2j)(x^) + (m-1-s+k)(x.)) on R^(m-1); lands in Ker D-."""
    n = m - 1

    def apply(P):
        inner = x_wedge(P, n).scale(m + 1 - s + k + 2 * j) + x_bullet(P, n).scale(m - 1 - s + k)
        return x_power(inner, 2 * j + 1, n)

    return Operator(apply, f"yhat[{2 * j + 2}]")


def gmt_factor(k: int, s: int, m: int) -> Operator:
    """(k-1+m-s)(x.) - (k-1+s)(x^) in R^m."""
    a, b = k - 1 + m - s, k - 1 + s

    def apply(P):
        return x_bullet(P).scale(a) - x_wedge(P).scale(b)

    return Operator(apply, f"V^({s},{k})")
