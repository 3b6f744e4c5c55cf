"""Projections onto Ker D+/Ker D-, kernel decompositions and the full Fischer check.

Pieces are built from H-space bases supplied by a ``basis_provider``
callable ``(m, k, s) -> Basis | list[MVPolynomial]``; by default the GT
construction is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from gmpy2 import mpq

from .mvpoly import MVPolynomial
from .operators import apply_word, dirac_minus, dirac_plus, x_bullet, x_power, x_wedge, y_minus, y_plus
from .verify import (
    dim_P,
    domain_basis,
    fischer_inner,
    kernel_dim_dirac_minus,
    kernel_dim_dirac_plus,
    rank,
)

BasisProvider = Callable[[int, int, int], object]


def _default_provider(m: int, k: int, s: int):
    from .gt_basis import gt_basis_hodge

    return gt_basis_hodge(m, k, s)


def _polys(b) -> list[MVPolynomial]:
    return list(b.polys()) if hasattr(b, "polys") else list(b)


def _degree_grade(p: MVPolynomial) -> tuple[int, int]:
    degs, grades = p.degrees(), p.grades()
    if len(degs) != 1 or len(grades) != 1:
        raise ValueError("projection needs a homogeneous single-grade polynomial")
    return degs.pop(), grades.pop()


def proj_plus(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    """Projection of P_k^s onto Ker_k^s D+ along (x.) Ker_(k-1)^(s+1) D+."""
    if not p:
        return p
    k, s = _degree_grade(p)
    if s + k == 0:
        return p
    return dirac_plus(x_bullet(p, n), n).scale(mpq(-1, s + k))


def proj_minus(p: MVPolynomial, n: int | None = None) -> MVPolynomial:
    """Projection of P_k^s onto Ker_k^s D- along (x^) Ker_(k-1)^(s-1) D-."""
    if not p:
        return p
    k, s = _degree_grade(p)
    nn = p.dim if n is None else n
    if nn - s + k == 0:
        return p
    return dirac_minus(x_wedge(p, n), n).scale(mpq(-1, nn - s + k))


def split_plus(p: MVPolynomial, n: int | None = None) -> tuple[MVPolynomial, MVPolynomial]:
    """(P+ p, q) with p = P+ p + (x.) q and D+ q = 0."""
    if not p:
        return p, p
    k, s = _degree_grade(p)
    if s + k == 0:
        return p, MVPolynomial.zero(p.dim)
    return proj_plus(p, n), dirac_plus(p, n).scale(mpq(-1, s + k))


def split_minus(p: MVPolynomial, n: int | None = None) -> tuple[MVPolynomial, MVPolynomial]:
    """(P- p, q) with p = P- p + (x^) q and D- q = 0."""
    if not p:
        return p, p
    k, s = _degree_grade(p)
    nn = p.dim if n is None else n
    if nn - s + k == 0:
        return p, MVPolynomial.zero(p.dim)
    return proj_minus(p, n), dirac_minus(p, n).scale(mpq(-1, nn - s + k))


@dataclass
class KernelPiece:
    factor: str
    source: tuple  # (k', s') of the H-space, or ("P", k, s) for a whole P-space
    elements: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.elements)


@dataclass
class KernelDecomposition:
    target: tuple  # (m, k, s, sign)
    pieces: list

    @property
    def dim(self) -> int:
        return sum(p.dim for p in self.pieces)

    def elements(self) -> list[MVPolynomial]:
        return [e for p in self.pieces for e in p.elements]

    def oracle_dim(self) -> int:
        m, k, s, sign = self.target
        return kernel_dim_dirac_plus(m, k, s) if sign == "+" else kernel_dim_dirac_minus(m, k, s)

    def check(self) -> dict:
        """Membership, direct-sum, cross-piece orthogonality and dimension against the oracle."""
        m, k, s, sign = self.target
        op = dirac_plus if sign == "+" else dirac_minus
        elems = self.elements()
        member = all(not op(e) for e in elems)
        independent = rank(elems) == len(elems)
        orth = True
        for a in range(len(self.pieces)):
            for b in range(a + 1, len(self.pieces)):
                for P in self.pieces[a].elements:
                    for Q in self.pieces[b].elements:
                        if fischer_inner(P, Q):
                            orth = False
        oracle = self.oracle_dim()
        return {
            "target": {"m": m, "k": k, "s": s, "sign": sign},
            "pieces": [{"factor": p.factor, "source": list(p.source), "dim": p.dim} for p in self.pieces],
            "dim": self.dim,
            "oracle_dim": oracle,
            "members": member,
            "independent": independent,
            "orthogonal": orth,
            "ok": member and independent and orth and self.dim == oracle,
        }


def decompose_ker(sign: str, m: int, k: int, s: int,
                  basis_provider: BasisProvider | None = None) -> KernelDecomposition:
    """Irreducible pieces of Ker_k^s D+ (sign '+') or Ker_k^s D- (sign '-') in R^m."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if m < 2 or k < 0 or not 0 <= s <= m:
        raise ValueError(f"bad parameters m={m}, k={k}, s={s}")
    provider = basis_provider or _default_provider
    target = (m, k, s, sign)

    def H(kk, ss):
        if kk < 0 or not 0 <= ss <= m:
            return []
        return _polys(provider(m, kk, ss))

    # the grade-0 / grade-m edge cases
    if (s == 0 and sign == "-") or (s == m and sign == "+"):
        return KernelDecomposition(target, [KernelPiece("1", ("P", k, s), domain_basis(m, k, [s]))])
    if s in (0, m):
        return KernelDecomposition(target, [KernelPiece("1", (k, s), H(k, s))])

    pieces = [KernelPiece("1", (k, s), H(k, s))]
    for j in range((k - 1) // 2 + 1 if k >= 1 else 0):
        kk = k - 2 * j - 1
        if sign == "+":
            imgs = [x_power(x_wedge(P), 2 * j) for P in H(kk, s - 1)]
            pieces.append(KernelPiece(f"x^{2 * j}(x^)", (kk, s - 1), imgs))
        else:
            imgs = [x_power(x_bullet(P), 2 * j) for P in H(kk, s + 1)]
            pieces.append(KernelPiece(f"x^{2 * j}(x.)", (kk, s + 1), imgs))
    for j in range((k - 2) // 2 + 1 if k >= 2 else 0):
        kk = k - 2 * j - 2
        op = y_plus(j) if sign == "+" else y_minus(j)
        name = f"y{sign}[{2 * j + 2}]"
        pieces.append(KernelPiece(name, (kk, s), [op(P) for P in H(kk, s)]))
    return KernelDecomposition(target, pieces)


# -- the full Fischer decomposition ---------------------------------------------------

def alternating_words(length: int) -> list[tuple]:
    """Alternating words in '^' and '.' of the given length, written left to right."""
    if length == 0:
        return [()]
    out = []
    for first in ("^", "."):  # first = letter applied first = rightmost
        word = []
        letter = first
        for _ in range(length):
            word.append(letter)
            letter = "." if letter == "^" else "^"
        out.append(tuple(reversed(word)))
    return out


def word_admissible(word: Sequence[str], s: int, m: int) -> bool:
    """A word kills H^s exactly when s = 0 and it starts (acts first) with (x.), or s = m with (x^)."""
    if not word:
        return True
    first = word[-1]
    if s == 0 and first == ".":
        return False
    if s == m and first == "^":
        return False
    return True


@dataclass
class FischerReport:
    m: int
    k: int
    pieces: list  # (s, k', word, dim)
    total: int
    expected: int
    rank: int | None

    @property
    def ok(self) -> bool:
        return self.total == self.expected and (self.rank is None or self.rank == self.expected)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "pieces": [{"s": s, "k": kk, "word": "".join(f"(x{c})" for c in w) or "1", "dim": d}
                       for s, kk, w, d in self.pieces],
            "total": self.total,
            "expected": self.expected,
            "rank": self.rank,
            "ok": self.ok,
        }


def verify_fischer_full(m: int, k: int, basis_provider: BasisProvider | None = None,
                        check_rank: bool = True) -> FischerReport:
    """Count (and optionally realise) every piece w H_(k')^s of the degree-k polynomials.

    The counts must add up to 2^m binom(k+m-1, m-1); with ``check_rank``
    the images w B are built and their joint rank compared as well.
    """
    provider = basis_provider or _default_provider
    pieces = []
    images = []
    for s in range(m + 1):
        for kk in range(k + 1):
            B = _polys(provider(m, kk, s))
            if not B:
                continue
            for word in alternating_words(k - kk):
                if not word_admissible(word, s, m):
                    continue
                pieces.append((s, kk, word, len(B)))
                if check_rank:
                    images.extend(apply_word(word, P) if word else P for P in B)
    total = sum(p[3] for p in pieces)
    r = rank(images) if check_rank else None
    return FischerReport(m, k, pieces, total, dim_P(m, k), r)
