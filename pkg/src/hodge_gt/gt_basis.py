"""Gelfand-Tsetlin bases of H_k^s(R^m) and related spaces.

The recursion runs m -> m-1 -> ... -> 2.  Each element carries a
:class:`GTLabel` recording the branch taken at every dimension step, so
the construction path doubles as a unique label.

Branch records (one per dimension from m down to 3):

* B+ pieces (initial data in Ker D+ on R^(m-1))
  ``direct``      P                        P in B_k^{s,m-1}
  ``xhat``   j    X^_{2j+1} P              P in B_{k-2j-1}^{s-1,m-1}
  ``ycheck`` j    Yv_{2j+2} P              P in B_{k-2j-2}^{s,m-1}
* B- pieces (initial data in (Ker D-) e_m)
  ``em_direct``   Q e_m                    Q in B_k^{s-1,m-1}
  ``xcheck_em`` j Xv_{2j+1} Q e_m          Q in B_{k-2j-1}^{s,m-1}
  ``yhat_em`` j   Y^_{2j+2} Q e_m          Q in B_{k-2j-2}^{s-1,m-1}
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from gmpy2 import mpq

from .ck import InitialDatum, ck_extend_hodge
from .mvpoly import MVPolynomial, mul, w, z
from .operators import dirac
from .special import CKMultiplier, gegenbauer_homog, gmt_factor
from .verify import scalar_ratio

BRANCHES = ("direct", "xhat", "ycheck", "em_direct", "xcheck_em", "yhat_em")
BASE_TAGS = ("+", "-", "scalar", "pseudoscalar", "re", "im")
ROUTES = ("multiplier", "ck")
MODES = ("complex", "real")


@dataclass(frozen=True)
class GTLabel:
    """Construction path of a basis element.

    ``steps`` holds (branch, j) records from dimension m down to 3;
    ``base`` tags the dimension-2 seed.  ``prefix`` holds extra records
    placed in front (grade or GMT piece markers, harmonic chains).
    """

    steps: tuple = ()
    base: str = ""
    prefix: tuple = ()

    def to_json(self) -> list:
        return [list(r) for r in self.prefix] + [list(r) for r in self.steps] + [self.base]

    @classmethod
    def from_json(cls, data: Sequence) -> "GTLabel":
        if not data or not isinstance(data[-1], str):
            raise ValueError(f"malformed label {data!r}")
        prefix, steps = [], []
        for rec in data[:-1]:
            if not isinstance(rec, (list, tuple)) or len(rec) != 2:
                raise ValueError(f"malformed label record {rec!r}")
            name, j = str(rec[0]), int(rec[1])
            (steps if name in BRANCHES else prefix).append((name, j))
        return cls(tuple(steps), data[-1], tuple(prefix))

    def with_prefix(self, *records) -> "GTLabel":
        return GTLabel(self.steps, self.base, tuple(records) + self.prefix)

    def with_base(self, base: str) -> "GTLabel":
        return GTLabel(self.steps, base, self.prefix)

    def pair_key(self):
        return (self.prefix, self.steps)

    def degree_used(self) -> int:
        """Degree consumed by the multiplier steps."""
        out = 0
        for name, j in self.steps:
            if name in ("xhat", "xcheck_em"):
                out += 2 * j + 1
            elif name in ("ycheck", "yhat_em"):
                out += 2 * j + 2
        return out

    def __str__(self):
        parts = [f"{n}({j})" if n not in ("direct", "em_direct") else n for n, j in self.prefix + self.steps]
        return " / ".join(parts + [self.base])


@dataclass(frozen=True)
class BasisElement:
    poly: MVPolynomial
    label: GTLabel


@dataclass(frozen=True)
class Basis:
    meta: dict
    elements: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[BasisElement]:
        return iter(self.elements)

    def __getitem__(self, i) -> BasisElement:
        return self.elements[i]

    def polys(self) -> list[MVPolynomial]:
        return [e.poly for e in self.elements]

    def labels(self) -> list[GTLabel]:
        return [e.label for e in self.elements]

    def find_by_label(self, label: GTLabel) -> BasisElement:
        for e in self.elements:
            if e.label == label:
                return e
        raise KeyError(f"no element with label {label}")

    def to_json(self) -> dict:
        algebra = self.meta.get("mode", "complex")
        return {
            "meta": dict(self.meta),
            "elements": [{"label": e.label.to_json(), "poly": e.poly.to_json(algebra)} for e in self.elements],
        }

    @classmethod
    def from_json(cls, data) -> "Basis":
        try:
            meta = dict(data["meta"])
            elems = tuple(
                BasisElement(MVPolynomial.from_json(e["poly"]), GTLabel.from_json(e["label"]))
                for e in data["elements"]
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed basis JSON: {exc}") from None
        return cls(meta, elems)

    def __eq__(self, other):
        if not isinstance(other, Basis):
            return NotImplemented
        return self.meta == other.meta and self.elements == other.elements

    def __hash__(self):
        return hash((tuple(sorted(self.meta.items(), key=lambda kv: kv[0])), self.elements))


def label_of(e: BasisElement) -> GTLabel:
    return e.label


def find_by_label(B: Basis, label: GTLabel) -> BasisElement:
    return B.find_by_label(label)


def normalize_poly(p: MVPolynomial) -> MVPolynomial:
    """Scale so the leading term (canonical order) has coefficient 1."""
    lead = p.leading()
    if lead is None:
        return p
    return p.scale(lead[1].inverse())


def _check_params(m: int, k: int, s: int):
    if m < 2:
        raise ValueError("m must be >= 2")
    if k < 0:
        raise ValueError("k must be >= 0")
    if not 0 <= s <= m:
        raise ValueError(f"grade s={s} out of range 0..{m}")


# -- the recursion ----------------------------------------------------------------

def _base_dim2(k: int, s: int) -> list[tuple[MVPolynomial, GTLabel]]:
    if s == 0:
        return [(MVPolynomial.constant(2, 1), GTLabel((), "scalar"))] if k == 0 else []
    if s == 2:
        return [(MVPolynomial.blade(2, [1, 2]), GTLabel((), "pseudoscalar"))] if k == 0 else []
    return [
        (mul(z(2, 1, k), w(2, 1)), GTLabel((), "+")),
        (mul(z(2, -1, k), w(2, -1)), GTLabel((), "-")),
    ]


def _right_em(p: MVPolynomial) -> MVPolynomial:
    return mul(p, MVPolynomial.blade(p.dim, [p.dim]))


def _lift(variant, m, kp, j, sp, P, minus, route):
    """Lift P (degree kp, grade sp, embedded in R^m) by a CK multiplier.

    ``minus`` marks the B- pieces, which are right-multiplied by e_m.
    route "multiplier" uses the closed forms; route "ck" applies the
    initial factor and runs the Hodge CK extension.
    """
    M = CKMultiplier(variant, m, kp, j, sp)
    if route == "multiplier":
        out = M(P)
        return _right_em(out) if minus else out
    init = M.initial_factor()(P)
    if not init:
        return init
    (k,) = init.degrees()
    (g,) = init.grades()
    zero = MVPolynomial.zero(m)
    if minus:
        return ck_extend_hodge(InitialDatum(zero, init, g + 1, k, m))
    return ck_extend_hodge(InitialDatum(init, zero, g, k, m))


@lru_cache(maxsize=None)
def _hodge_raw(m: int, k: int, s: int, route: str) -> tuple:
    if m == 2:
        return tuple(_base_dim2(k, s))
    if s == 0:
        if k:
            return ()
        return ((MVPolynomial.constant(m, 1), GTLabel((("direct", 0),) * (m - 2), "scalar")),)
    if s == m:
        if k:
            return ()
        eM = MVPolynomial.blade(m, range(1, m + 1))
        return ((eM, GTLabel((("em_direct", 0),) * (m - 2), "pseudoscalar")),)

    out = []

    def lower(kk, ss):
        if kk < 0 or not 0 <= ss <= m - 1:
            return ()
        return _hodge_raw(m - 1, kk, ss, route)

    def emit(poly, step, lab):
        if not poly:
            raise RuntimeError(f"zero element produced at m={m}, k={k}, s={s}, step={step}")
        out.append((poly, GTLabel((step,) + lab.steps, lab.base)))

    # B+
    for P, lab in lower(k, s):
        emit(P.embed(m), ("direct", 0), lab)
    for j in range((k - 1) // 2 + 1 if k >= 1 else 0):
        kp = k - 2 * j - 1
        for P, lab in lower(kp, s - 1):
            emit(_lift("Xhat", m, kp, 2 * j + 1, s - 1, P.embed(m), False, route), ("xhat", j), lab)
    for j in range((k - 2) // 2 + 1 if k >= 2 else 0):
        kp = k - 2 * j - 2
        for P, lab in lower(kp, s):
            emit(_lift("Ycheck", m, kp, j, s, P.embed(m), False, route), ("ycheck", j), lab)
    # B-
    for Q, lab in lower(k, s - 1):
        emit(_right_em(Q.embed(m)), ("em_direct", 0), lab)
    for j in range((k - 1) // 2 + 1 if k >= 1 else 0):
        kp = k - 2 * j - 1
        for Q, lab in lower(kp, s):
            emit(_lift("Xcheck", m, kp, 2 * j + 1, s, Q.embed(m), True, route), ("xcheck_em", j), lab)
    for j in range((k - 2) // 2 + 1 if k >= 2 else 0):
        kp = k - 2 * j - 2
        for Q, lab in lower(kp, s - 1):
            emit(_lift("Yhat", m, kp, j, s - 1, Q.embed(m), True, route), ("yhat_em", j), lab)
    return tuple(out)


def _finish(meta: dict, raw: Iterable, normalize: bool) -> Basis:
    elems = tuple(BasisElement(normalize_poly(p) if normalize else p, lab) for p, lab in raw)
    return Basis(meta, elems)


def gt_basis_hodge(m: int, k: int, s: int, mode: str = "complex", route: str = "multiplier",
                   normalize: bool = False) -> Basis:
    """GT basis of H_k^s(R^m).

    ``route`` picks the closed-form multipliers or the CK extension of the
    initial factors; both give identical polynomials.
    """
    _check_params(m, k, s)
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    meta = {"kind": "hodge", "m": m, "k": k, "s": s, "mode": "complex"}
    B = _finish(meta, _hodge_raw(m, k, s, route), False)
    if mode == "real":
        B = realify(B)
    if normalize:
        B = Basis(B.meta, tuple(BasisElement(normalize_poly(e.poly), e.label) for e in B))
    return B


def realify(B: Basis) -> Basis:
    """Replace each conjugate pair (P+, P-) by (Re P+, Im P+); real elements pass through."""
    if B.meta.get("mode") == "real":
        return B
    by_key: dict = {}
    for e in B:
        if e.label.base in ("+", "-"):
            by_key.setdefault(e.label.pair_key(), {})[e.label.base] = e
    out = []
    for e in B:
        tag = e.label.base
        if tag not in ("+", "-"):
            if not e.poly.is_real():
                raise ValueError(f"element {e.label} is neither real nor paired")
            out.append(e)
            continue
        pair = by_key[e.label.pair_key()]
        if set(pair) != {"+", "-"}:
            raise ValueError(f"element {e.label} has no conjugate partner")
        P = pair["+"].poly
        Pc = P.conjugate()
        if scalar_ratio(Pc, pair["-"].poly) is None:
            raise ValueError(f"elements {e.label} are not a conjugate pair")
        if tag == "+":
            out.append(BasisElement(P.real_part(), e.label.with_base("re")))
        else:
            out.append(BasisElement(P.imag_part(), e.label.with_base("im")))
    meta = dict(B.meta)
    meta["mode"] = "real"
    return Basis(meta, tuple(out))


def dual_basis(B: Basis) -> Basis:
    """P -> P e_M, a basis of H_k^(m-s)."""
    m = B.meta["m"]
    eM = MVPolynomial.blade(m, range(1, m + 1))
    meta = dict(B.meta)
    if "s" in meta:
        meta["s"] = m - meta["s"]
    meta["dual"] = not meta.get("dual", False)
    return Basis(meta, tuple(BasisElement(mul(e.poly, eM), e.label) for e in B))


def _harmonic_chains(m: int, n: int):
    """Chains (k_1, ..., k_{m-2}) with n >= k_1 >= ... >= k_{m-2} >= 0, in lexicographic order."""
    def rec(prev, left):
        if not left:
            yield ()
            return
        for v in range(prev, -1, -1):
            for rest in rec(v, left - 1):
                yield (v,) + rest
    yield from rec(n, m - 2)


@lru_cache(maxsize=None)
def _harmonic_raw(m: int, n: int) -> tuple:
    out = []
    for chain in _harmonic_chains(m, n):
        ks = (n,) + chain
        prod = MVPolynomial.constant(m, 1)
        for j in range(m - 2):
            nu = mpq(m - j - 2, 2) + ks[j + 1]
            prod = prod * gegenbauer_homog(ks[j] - ks[j + 1], nu, m, m - j)
        last = ks[-1]
        prefix = tuple(("chain", c) for c in chain)
        if last == 0:
            out.append((prod, GTLabel((), "scalar", prefix)))
        else:
            out.append((z(m, 1, last) * prod, GTLabel((), "+", prefix)))
            out.append((z(m, -1, last) * prod, GTLabel((), "-", prefix)))
    return tuple(out)


def harmonic_gt_basis(m: int, n: int, mode: str = "complex", normalize: bool = False) -> Basis:
    """GT basis of the scalar harmonics of degree n on R^m (Gegenbauer chains)."""
    if m < 2 or n < 0:
        raise ValueError("need m >= 2 and n >= 0")
    meta = {"kind": "harmonic", "m": m, "k": n, "s": 0, "mode": "complex"}
    B = _finish(meta, _harmonic_raw(m, n), normalize)
    return realify(B) if mode == "real" else B


def riesz_basis(m: int, k: int, dual: bool = False, mode: str = "complex") -> Basis:
    """{D Xi} for Xi in the harmonic GT basis of degree k+1; ``dual`` multiplies by e_M."""
    H = harmonic_gt_basis(m, k + 1)
    out = []
    for e in H:
        P = dirac(e.poly)
        if not P:
            raise RuntimeError(f"D annihilated harmonic element {e.label}")
        out.append(BasisElement(P, e.label))
    meta = {"kind": "riesz", "m": m, "k": k, "s": 1, "mode": "complex"}
    B = Basis(meta, tuple(out))
    if dual:
        B = dual_basis(B)
    return realify(B) if mode == "real" else B


def gmt_shifted_grades(S: Iterable[int]) -> list[int]:
    """Grades s with both s-1 and s+1 in S."""
    S = set(S)
    return sorted(s for s in S | {t + 1 for t in S} if s - 1 in S and s + 1 in S)


def gmt_basis(m: int, k: int, S: Iterable[int], mode: str = "complex", route: str = "multiplier",
              normalize: bool = False) -> Basis:
    """Basis of the Cl^S-valued monogenic polynomials of degree k on R^m."""
    S = sorted(set(S))
    if m < 2 or k < 0:
        raise ValueError("need m >= 2 and k >= 0")
    if any(not 0 <= s <= m for s in S):
        raise ValueError(f"grade set {S} out of range 0..{m}")
    out = []
    for s in S:
        for e in gt_basis_hodge(m, k, s, route=route):
            out.append(BasisElement(e.poly, e.label.with_prefix(("grade", s))))
    if k >= 1:
        for s in gmt_shifted_grades(S):
            V = gmt_factor(k, s, m)
            for e in gt_basis_hodge(m, k - 1, s, route=route):
                P = V(e.poly)
                if not P:
                    raise RuntimeError(f"GMT factor annihilated {e.label}")
                out.append(BasisElement(P, e.label.with_prefix(("gmt", s))))
    meta = {"kind": "gmt", "m": m, "k": k, "S": S, "mode": "complex"}
    B = Basis(meta, tuple(out))
    if mode == "real":
        B = realify(B)
    if normalize:
        B = Basis(B.meta, tuple(BasisElement(normalize_poly(e.poly), e.label) for e in B))
    return B


def basis_for(meta: dict) -> Basis:
    """Rebuild the basis described by a meta dict (used when verifying stored files)."""
    kind = meta.get("kind", "hodge")
    mode = meta.get("mode", "complex")
    if kind == "gmt":
        return gmt_basis(meta["m"], meta["k"], meta["S"], mode)
    if kind == "harmonic":
        return harmonic_gt_basis(meta["m"], meta["k"], mode)
    return gt_basis_hodge(meta["m"], meta["k"], meta["s"], mode)
