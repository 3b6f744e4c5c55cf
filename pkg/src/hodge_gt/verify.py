"""Inner products, Gram reports and brute-force linear-algebra oracles.

The oracles never call the basis construction: they build the matrix of
a differential operator on the monomial-blade basis of P_k^s and compute
its kernel by exact elimination.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial, gcd
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq

from .mvpoly import MVPolynomial
from .operators import dirac, dirac_minus, dirac_plus, laplacian
from .scalar import Scalar

DEFAULT_SIZE_CAP = 5000


class SizeCapExceeded(RuntimeError):
    """The oracle matrix would exceed the configured column cap."""


def size_cap() -> int:
    raw = os.environ.get("HODGE_GT_SIZE_CAP")
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"HODGE_GT_SIZE_CAP must be an integer, got {raw!r}") from None


def _check_cap(n: int, what: str):
    cap = size_cap()
    if n > cap:
        raise SizeCapExceeded(f"{what}: {n} columns exceeds size cap {cap}")


# -- inner products ------------------------------------------------------------------

def _same_dim(P: MVPolynomial, Q: MVPolynomial):
    if P.dim != Q.dim:
        raise ValueError(f"dimension mismatch: {P.dim} vs {Q.dim}")


def _conj_mul(a: Scalar, b: Scalar):
    """conj(a) * b as an (re, im) pair of mpq."""
    return a.re * b.re + a.im * b.im, a.re * b.im - a.im * b.re


def fischer_inner(P: MVPolynomial, Q: MVPolynomial) -> Scalar:
    """sum_alpha alpha! [bar(a_alpha) b_alpha]_0; conj(e_B) e_B = 1 for every blade."""
    _same_dim(P, Q)
    pt, qt = P._terms, Q._terms
    if len(pt) > len(qt):
        small, big, swap = qt, pt, True
    else:
        small, big, swap = pt, qt, False
    re = mpq(0)
    im = mpq(0)
    for key, c in small.items():
        d = big.get(key)
        if d is None:
            continue
        a, b = (d, c) if swap else (c, d)
        w = _multi_factorial(key[0])
        r, i = _conj_mul(a, b)
        re += w * r
        im += w * i
    return Scalar._raw(re, im)


@lru_cache(maxsize=None)
def _multi_factorial(alpha: tuple) -> int:
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def _double_factorial_odd(a: int) -> int:
    # (a-1)!! for even a >= 0
    out = 1
    for t in range(a - 1, 0, -2):
        out *= t
    return out


@lru_cache(maxsize=None)
def sphere_moment(alpha: tuple) -> mpq:
    """Mean of x^alpha over the unit sphere S^(m-1), m = len(alpha)."""
    if any(a % 2 for a in alpha):
        return mpq(0)
    m = len(alpha)
    num = 1
    for a in alpha:
        num *= _double_factorial_odd(a)
    den = 1
    for t in range(0, sum(alpha), 2):
        den *= m + t
    return mpq(num, den)


def _parity_groups(P: MVPolynomial) -> dict:
    groups: dict = {}
    for (e, b), c in P._terms.items():
        groups.setdefault((b, tuple(a & 1 for a in e)), []).append((e, c))
    return groups


def l2_inner(P: MVPolynomial, Q: MVPolynomial) -> Scalar:
    """Normalised spherical mean of [bar(P) Q]_0."""
    _same_dim(P, Q)
    gp, gq = _parity_groups(P), _parity_groups(Q)
    re = mpq(0)
    im = mpq(0)
    for key, plist in gp.items():
        qlist = gq.get(key)
        if not qlist:
            continue
        for ea, a in plist:
            for eb, b in qlist:
                mom = sphere_moment(tuple(x + y for x, y in zip(ea, eb)))
                if mom:
                    r, i = _conj_mul(a, b)
                    re += mom * r
                    im += mom * i
    return Scalar._raw(re, im)


def _l2_pairwise(polys: Sequence[MVPolynomial]) -> Callable:
    """l2_inner restricted to ``polys``, via the moment transform of each right factor.

    T(Q)[alpha, B] = sum_beta M(alpha + beta) b_(beta, B) over the supports
    present in ``polys``; then (P, Q) = sum conj(a) T(Q), a Fischer-sized sum.
    """
    support: dict = {}
    for P in polys:
        for (e, b) in P._terms:
            support.setdefault((b, tuple(a & 1 for a in e)), set()).add(e)
    cache: dict = {}

    def transform(Q):
        key = id(Q)
        if key in cache:
            return cache[key][1]
        out = {}
        for (b, par), qlist in _parity_groups(Q).items():
            for ea in support.get((b, par), ()):
                re = mpq(0)
                im = mpq(0)
                for eb, c in qlist:
                    mom = sphere_moment(tuple(x + y for x, y in zip(ea, eb)))
                    if mom:
                        re += mom * c.re
                        im += mom * c.im
                if re or im:
                    out[(ea, b)] = (re, im)
        cache[key] = (Q, out)
        return out

    def inner(P, Q):
        _same_dim(P, Q)
        tq = transform(Q)
        re = mpq(0)
        im = mpq(0)
        for k, a in P._terms.items():
            t = tq.get(k)
            if t is not None:
                re += a.re * t[0] + a.im * t[1]
                im += a.re * t[1] - a.im * t[0]
        return Scalar._raw(re, im)

    return inner


INNER_PRODUCTS: dict[str, Callable] = {"fischer": fischer_inner, "l2": l2_inner}


@dataclass
class GramReport:
    kind: str
    size: int
    diagonal: list
    max_offdiag: mpq  # largest squared modulus off the diagonal
    ok: bool
    meta: dict = field(default_factory=dict)
    bad_pairs: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "size": self.size,
            "meta": self.meta,
            "diagonal": [d.json_parts() for d in self.diagonal],
            "max_offdiag_sq": str(self.max_offdiag),
            "bad_pairs": self.bad_pairs[:20],
            "ok": self.ok,
        }


def gram(polys: Sequence[MVPolynomial] | object, kind: str = "fischer", meta: dict | None = None) -> GramReport:
    """Exact Gram matrix check; accepts a list of polynomials or a Basis."""
    if hasattr(polys, "polys"):
        meta = dict(polys.meta) if meta is None else meta
        polys = polys.polys()
    polys = list(polys)
    if kind not in INNER_PRODUCTS:
        raise ValueError(f"unknown inner product {kind!r}")
    ip = _l2_pairwise(polys) if kind == "l2" else INNER_PRODUCTS[kind]
    diag = []
    worst = mpq(0)
    bad = []
    for i, P in enumerate(polys):
        d = ip(P, P)
        diag.append(d)
        if not d.is_positive():
            bad.append((i, i))
        for j in range(i + 1, len(polys)):
            g = ip(P, polys[j])
            if g:
                n2 = g.norm2()
                worst = max(worst, n2)
                bad.append((i, j))
    return GramReport(kind, len(polys), diag, worst, not bad, meta or {}, bad)


# -- exact elimination ---------------------------------------------------------------

def _content(vec: dict) -> int:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


class _IntegerEliminator:
    """Incremental fraction-free elimination of sparse integer vectors.

    Each accepted vector is reduced against all earlier pivots (insertion
    order), so a single pass suffices for every later reduction.  When
    ``track`` is on, each vector carries the integer combination of input
    columns it represents; columns reducing to zero give kernel vectors.
    """

    def __init__(self, track: bool = False):
        self.pivots: list = []  # (pivot_key, vec, combo)
        self.pivot_keys: dict = {}
        self.track = track
        self.kernel: list = []
        self._n = 0

    def add(self, vec: dict) -> bool:
        idx = self._n
        self._n += 1
        vec = dict(vec)
        combo = {idx: 1} if self.track else None
        for key, pvec, pcombo in self.pivots:
            c = vec.get(key)
            if not c:
                continue
            p = pvec[key]
            g = gcd(p, c)
            fp, fc = p // g, c // g
            out = {k: fp * v for k, v in vec.items()}
            for k, v in pvec.items():
                nv = out.get(k, 0) - fc * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            vec = out
            if combo is not None:
                nc = {k: fp * v for k, v in combo.items()}
                for k, v in pcombo.items():
                    nv = nc.get(k, 0) - fc * v
                    if nv:
                        nc[k] = nv
                    else:
                        nc.pop(k, None)
                combo = nc
            g = gcd(_content(vec), _content(combo) if combo else 0)
            if g > 1:
                vec = {k: v // g for k, v in vec.items()}
                if combo is not None:
                    combo = {k: v // g for k, v in combo.items()}
        if not vec:
            if combo is not None:
                self.kernel.append(combo)
            return False
        key = min(vec)
        self.pivots.append((key, vec, combo))
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _as_int_vector(p: MVPolynomial) -> dict:
    out = {}
    for key, c in p._terms.items():
        if c.im or c.re.denominator != 1:
            raise ValueError("oracle matrices must have integer entries")
        out[key] = int(c.re.numerator)
    return out


def monomial_exponents(m: int, k: int) -> list[tuple]:
    out = []
    for combo in combinations_with_replacement(range(m), k):
        e = [0] * m
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def blades_of_grade(m: int, s: int) -> list[int]:
    return [sum(1 << i for i in c) for c in combinations(range(m), s)]


def dim_P(m: int, k: int, s: int | None = None) -> int:
    """dim P_k^s (or of all Cl_m-valued k-homogeneous polynomials when s is None)."""
    n = comb(k + m - 1, m - 1)
    return n * (2 ** m if s is None else comb(m, s))


def domain_basis(m: int, k: int, grades: Iterable[int]) -> list[MVPolynomial]:
    """Monomial-blade basis x^alpha e_B of P_k^S."""
    out = []
    for s in sorted(set(grades)):
        if not 0 <= s <= m:
            continue
        for b in blades_of_grade(m, s):
            for e in monomial_exponents(m, k):
                out.append(MVPolynomial._make(m, {(e, b): Scalar(1)}))
    return out


def _kernel(m: int, k: int, grades, op, want_basis: bool = False):
    dom = domain_basis(m, k, grades)
    _check_cap(len(dom), f"P_{k}^{sorted(set(grades))}(R^{m})")
    el = _IntegerEliminator(track=want_basis)
    for p in dom:
        el.add(_as_int_vector(op(p)))
    dim = len(dom) - el.rank
    if not want_basis:
        return dim
    basis = []
    for combo in el.kernel:
        terms = {}
        for idx, v in combo.items():
            (key,) = dom[idx]._terms
            terms[key] = Scalar(v)
        basis.append(MVPolynomial._make(m, terms))
    return dim, basis


def nullspace_dim_hodge(m: int, k: int, s: int, with_basis: bool = False):
    """dim of Ker D on P_k^s(R^m), i.e. dim H_k^s."""
    if not 0 <= s <= m:
        raise ValueError(f"grade {s} out of range for m={m}")
    return _kernel(m, k, [s], dirac, with_basis)


def nullspace_dim_gmt(m: int, k: int, S: Iterable[int], with_basis: bool = False):
    """dim of Ker D on Cl^S-valued P_k(R^m)."""
    S = sorted(set(S))
    if any(not 0 <= s <= m for s in S):
        raise ValueError(f"grade set {S} out of range for m={m}")
    if not S:
        return (0, []) if with_basis else 0
    return _kernel(m, k, S, dirac, with_basis)


def kernel_dim_dirac_plus(m: int, k: int, s: int) -> int:
    return _kernel(m, k, [s], dirac_plus)


def kernel_dim_dirac_minus(m: int, k: int, s: int) -> int:
    return _kernel(m, k, [s], dirac_minus)


def harmonic_dim(m: int, n: int) -> int:
    """dim of Ker(Laplacian) on scalar P_n(R^m)."""
    return _kernel(m, n, [0], laplacian)


# -- rank over Q(i) -----------------------------------------------------------------

def _reduce(vec: dict, pivots: list) -> dict:
    for key, pvec in pivots:
        c = vec.get(key)
        if not c:
            continue
        for k, v in pvec.items():
            nv = vec.get(k)
            nv = -c * v if nv is None else nv - c * v
            if nv:
                vec[k] = nv
            else:
                vec.pop(k, None)
    return vec


def _echelon(polys: Iterable[MVPolynomial]) -> list:
    pivots = []
    for p in polys:
        vec = _reduce(dict(p._terms), pivots)
        if vec:
            key = min(vec)
            inv = vec[key].inverse()
            pivots.append((key, {k: v * inv for k, v in vec.items()}))
    return pivots


def rank(polys: Iterable[MVPolynomial]) -> int:
    return len(_echelon(polys))


def in_span(p: MVPolynomial, polys: Iterable[MVPolynomial]) -> bool:
    return not _reduce(dict(p._terms), _echelon(polys))


def span_equal(A: Sequence[MVPolynomial], B: Sequence[MVPolynomial]) -> bool:
    A, B = list(A), list(B)
    ra, rb = rank(A), rank(B)
    return ra == rb and rank(A + B) == ra


def is_linearly_independent(polys: Sequence[MVPolynomial]) -> bool:
    polys = list(polys)
    return rank(polys) == len(polys)


def scalar_ratio(p: MVPolynomial, q: MVPolynomial):
    """c with p == c*q (c != 0), or None."""
    if not p or not q or p.dim != q.dim or set(p._terms) != set(q._terms):
        return None
    key = next(iter(q._terms))
    c = p._terms[key] / q._terms[key]
    if q.scale(c) == p:
        return c
    return None


def match_up_to_scalar(constructed, reference) -> tuple[bool, list]:
    """Pair each reference polynomial with exactly one constructed one, up to a nonzero scalar.

    Returns (ok, pairs) with pairs = [(ref_index, constructed_index, scalar)];
    unmatched reference items appear with constructed_index None.
    """
    A = list(constructed)
    R = list(reference)
    used = set()
    pairs = []
    for i, r in enumerate(R):
        hit = None
        for j, a in enumerate(A):
            if j in used:
                continue
            c = scalar_ratio(r, a)
            if c is not None:
                hit = (i, j, c)
                used.add(j)
                break
        pairs.append(hit or (i, None, None))
    ok = len(A) == len(R) and all(p[1] is not None for p in pairs)
    return ok, pairs


def check_basis(B) -> dict:
    """Membership, value grades, Gram and cardinality checks for a stored basis.

    ``B`` is duck-typed: it needs ``meta`` and ``polys()``.
    """
    meta = dict(B.meta)
    kind = meta.get("kind", "hodge")
    m, k = int(meta["m"]), int(meta["k"])
    polys = list(B.polys())
    problems = []
    if any(p.dim != m for p in polys):
        problems.append("ambient dimension mismatch")
    if any(not p for p in polys):
        problems.append("zero element")
    if any(not p.is_homogeneous(k) for p in polys):
        problems.append(f"element not homogeneous of degree {k}")
    if meta.get("mode") == "real" and any(not p.is_real() for p in polys):
        problems.append("imaginary coefficients in a real-mode basis")

    if kind in ("hodge", "riesz"):
        s = int(meta["s"])
        allowed = {s}
        if any(dirac_plus(p) or dirac_minus(p) for p in polys):
            problems.append("element not annihilated by D+ and D-")
        expected = nullspace_dim_hodge(m, k, s)
    elif kind == "gmt":
        allowed = set(int(s) for s in meta["S"])
        if any(dirac(p) for p in polys):
            problems.append("element not monogenic")
        expected = nullspace_dim_gmt(m, k, allowed)
    elif kind == "gmt_piece":
        s = int(meta["s"])
        allowed = {s - 1, s + 1}
        if any(dirac(p) for p in polys):
            problems.append("element not monogenic")
        expected = nullspace_dim_hodge(m, k - 1, s) if k >= 1 else 0
    elif kind == "harmonic":
        allowed = {0}
        if any(laplacian(p) for p in polys):
            problems.append("element not harmonic")
        expected = harmonic_dim(m, k)
    else:
        raise ValueError(f"unknown basis kind {kind!r}")
    if any(not p.grades() <= allowed for p in polys):
        problems.append(f"values outside grades {sorted(allowed)}")
    if len(polys) != expected:
        problems.append(f"cardinality {len(polys)} != oracle {expected}")
    grams = {kind_: gram(polys, kind_) for kind_ in ("fischer", "l2")}
    for kind_, g in grams.items():
        if not g.ok:
            problems.append(f"{kind_} Gram matrix not diagonal-positive")
    return {
        "meta": meta,
        "size": len(polys),
        "oracle_dim": expected,
        "gram": {kind_: {"ok": g.ok, "max_offdiag_sq": str(g.max_offdiag)} for kind_, g in grams.items()},
        "problems": problems,
        "ok": not problems,
    }
