"""Random test inputs: polynomials, initial data and H-space elements."""

from __future__ import annotations

import random
from typing import Iterable

from .ck import InitialDatum, ck_extend_hodge
from .mvpoly import MVPolynomial
from .fischer import proj_minus, proj_plus
from .scalar import Scalar
from .verify import blades_of_grade, monomial_exponents


def random_poly(dim: int, k: int, grades: Iterable[int], rng: random.Random, nvars: int | None = None,
                n_terms: int = 6, complex_coeffs: bool = True) -> MVPolynomial:
    """Sparse k-homogeneous polynomial with small Gaussian-integer coefficients.

    Only the first ``nvars`` variables and generators are used.
    """
    n = dim if nvars is None else nvars
    grades = [s for s in grades if 0 <= s <= n]
    if not grades:
        return MVPolynomial.zero(dim)
    monos = monomial_exponents(n, k)
    pad = (0,) * (dim - n)
    terms = {}
    for _ in range(n_terms):
        s = rng.choice(grades)
        b = rng.choice(blades_of_grade(n, s))
        e = rng.choice(monos) + pad
        c = Scalar(rng.randint(-4, 4), rng.randint(-4, 4) if complex_coeffs else 0)
        if c:
            terms[(e, b)] = c
    return MVPolynomial(dim, terms)


def random_initial_datum(m: int, k: int, s: int, rng: random.Random, **kw) -> InitialDatum:
    """u0 + v0 e_m with u0 = P+ (random), v0 = P- (random) on R^(m-1)."""
    n = m - 1
    u0 = proj_plus(random_poly(m, k, [s], rng, nvars=n, **kw), n)
    v0 = proj_minus(random_poly(m, k, [s - 1], rng, nvars=n, **kw), n) if s >= 1 else MVPolynomial.zero(m)
    return InitialDatum(u0, v0, s, k, m)


def random_h_element(m: int, k: int, s: int, rng: random.Random, **kw) -> MVPolynomial:
    """Random element of H_k^s(R^m) (possibly zero when the space is small)."""
    return ck_extend_hodge(random_initial_datum(m, k, s, rng, **kw))
