"""Write the reference listings under src/hodge_gt/golden/ as Basis JSON.

Each listing is typed in with the z/w shorthand exactly as printed in the
source tables; items written with a ± expand to a (+, -) pair.  Run from
the repository root:  python3 tools/make_golden.py
"""

import json
from pathlib import Path

from hodge_gt.gt_basis import Basis, BasisElement, GTLabel
from hodge_gt.mvpoly import MVPolynomial, w, z
from hodge_gt.scalar import I, Scalar

OUT = Path(__file__).resolve().parent.parent / "src" / "hodge_gt" / "golden"
HALF = Scalar(1) / 2


class Sym:
    """Shorthand atoms in a fixed ambient dimension."""

    def __init__(self, d):
        self.d = d
        self.zp, self.zm = z(d, 1), z(d, -1)
        self.wp, self.wm = w(d, 1), w(d, -1)
        self.x3 = MVPolynomial.var(d, 3)
        self.x4 = MVPolynomial.var(d, 4) if d >= 4 else None
        self.e3 = MVPolynomial.blade(d, [3])
        self.e4 = MVPolynomial.blade(d, [4]) if d >= 4 else None
        self.e12 = MVPolynomial.blade(d, [1, 2])
        self.e34 = MVPolynomial.blade(d, [3, 4]) if d >= 4 else None
        self.e123 = MVPolynomial.blade(d, [1, 2, 3])
        self.one = MVPolynomial.constant(d, 1)

    def pm(self, sg):
        """(z_s, w_s, w_other, sign) for the branch sg = +1 / -1."""
        if sg > 0:
            return self.zp, self.wp, self.wm, 1
        return self.zm, self.wm, self.wp, -1

    def c(self, v):
        return self.one.scale(v)


def items(*entries):
    """entries: polynomials, or callables of sg (expanded to the ± pair)."""
    out = []
    for idx, entry in enumerate(entries):
        if callable(entry):
            out.append((entry(1), idx, "+"))
            out.append((entry(-1), idx, "-"))
        else:
            out.append((entry, idx, "single"))
    return out


def b13(k):
    S = Sym(3)
    zp, zm, wp, wm, x3, e3 = S.zp, S.zm, S.wp, S.wm, S.x3, S.e3
    if k == 0:
        return items(lambda sg: S.pm(sg)[1], e3)
    if k == 1:
        return items(
            lambda sg: S.pm(sg)[0] * S.pm(sg)[1],
            (zm * wp + zp * wm).scale(HALF) - (x3 * e3).scale(2),
            lambda sg: -(S.pm(sg)[0] * e3) - x3 * S.pm(sg)[1],
        )
    if k == 2:
        def third(sg):
            zs, ws, wo, _ = S.pm(sg)
            return (x3 * zs * e3).scale(8) - zs ** 2 * wo + ((x3 ** 2).scale(4) - (zp * zm).scale(2)) * ws

        return items(
            lambda sg: S.pm(sg)[0] ** 2 * S.pm(sg)[1],
            lambda sg: -(x3 * S.pm(sg)[0] * S.pm(sg)[1]).scale(2) - S.pm(sg)[0] ** 2 * e3,
            ((x3 ** 2).scale(8) - (zp * zm).scale(4)) * e3 - (x3 * (zm * wp + zp * wm)).scale(4),
            third,
        )
    raise ValueError(k)


def b23(k):
    S = Sym(3)
    return [(p * S.e123, idx, tag) for p, idx, tag in b13(k)]


def b24(k):
    S = Sym(4)
    zp, zm, wp, wm = S.zp, S.zm, S.wp, S.wm
    x3, x4, e3, e4, e12, e34 = S.x3, S.x4, S.e3, S.e4, S.e12, S.e34
    if k == 0:
        return items(e12, e34, lambda sg: S.pm(sg)[1] * e3, lambda sg: S.pm(sg)[1] * e4)
    head = [(p.embed(4), ("b23", idx), tag) for p, idx, tag in b23(k)]
    head += [(p.embed(4) * e4, ("b13e4", idx), tag) for p, idx, tag in b13(k)]
    sym = zm * wp + zp * wm
    asym = zm * wp - zp * wm
    if k == 1:
        tail = items(
            (zp * wm + zm * wp) * e3.scale(HALF) + (x4 * e34).scale(2),
            lambda sg: -(x3 * S.pm(sg)[1] * e3) + (S.pm(sg)[0] * e12).scale(I * sg) + (x4 * S.pm(sg)[1] * e4).scale(2),
            (asym * e4).scale(I * HALF) + (x4 * e12).scale(2),
            lambda sg: -(S.pm(sg)[0] * e34) + x3 * S.pm(sg)[1] * e4 + (x4 * S.pm(sg)[1] * e3).scale(2),
        )
    elif k == 2:
        def t1(sg):
            zs, ws, _, s = S.pm(sg)
            return -(x3 * zs * ws * e3) + (zs ** 2 * e12).scale(I * s) + (x4 * zs * ws * e4).scale(3)

        def t3(sg):
            zs, ws, _, s = S.pm(sg)
            return (x3 ** 2 * ws * e3 - zs.scale(HALF) * sym * e3 - (x3 * zs * e12).scale(I * s)
                    - (x4 * zs * e34).scale(3) - (x3 * x4 * ws * e4).scale(3))

        def t5(sg):
            zs, ws, wo, s = S.pm(sg)
            quad = (x4 ** 2).scale(10) - (x3 ** 2).scale(4) - (zp * zm).scale(3)
            return (quad * ws * e3 + (x3 * x4 * ws * e4).scale(10) - zs ** 2 * wo * e3
                    + (x3 * zs * e12).scale(2 * I * s) - (x4 * zs * e34).scale(10))

        def t6(sg):
            zs, ws, _, s = S.pm(sg)
            return (x3 ** 2 * ws * e4 - (zs.scale(HALF) * asym * e4).scale(s) - x3 * zs * e34
                    + (x4 * zs * e12).scale(3 * I * s) + (x3 * x4 * ws * e3).scale(3))

        def t7(sg):
            zs, ws, _, _ = S.pm(sg)
            return x3 * zs * ws * e4 - zs ** 2 * e34 + (x4 * zs * ws * e3).scale(3)

        def t9(sg):
            zs, ws, wo, s = S.pm(sg)
            quad = (x4 ** 2).scale(10) - (x3 ** 2).scale(4) - (zp * zm).scale(3)
            return (quad * ws * e4 - (x3 * x4 * ws * e3).scale(10) + zs ** 2 * wo * e4
                    + (x3 * zs * e34).scale(2) + (x4 * zs * e12).scale(10 * I * s))

        quad2 = (zp * zm).scale(4) + (x3 ** 2).scale(2) - (x4 ** 2).scale(10)
        tail = items(
            t1,
            (sym * (x4 * e4 - x3 * e3)).scale(Scalar(3) / 2) - (x3 * x4 * e34).scale(6),
            t3,
            (asym * ((x4 * e4).scale(5) - x3 * e3)).scale(I) - quad2 * e12,
            t5,
            t6,
            t7,
            (asym * (x3 * e4 + x4 * e3)).scale(I * Scalar(3) / 2) + (x3 * x4 * e12).scale(6),
            t9,
            sym * ((x4 * e3).scale(5) + x3 * e4) - quad2 * e34,
        )
    else:
        raise ValueError(k)
    return head + [(p, ("new", idx), tag) for p, idx, tag in tail]


def v13(k):
    S = Sym(3)
    zp, zm, wp, wm, x3, e3, e12 = S.zp, S.zm, S.wp, S.wm, S.x3, S.e3, S.e12
    sym = zm * wp + zp * wm
    if k == 1:
        return items(
            lambda sg: -S.pm(sg)[0].scale(2) + x3 * S.pm(sg)[1] * e3 - (S.pm(sg)[0] * e12).scale(I * sg),
            -x3.scale(2) - (sym * e3).scale(HALF),
        )
    if k == 2:
        def third(sg):
            zs, ws, wo, s = S.pm(sg)
            return ((x3 * zs).scale(6) + (x3 * zs * e12).scale(2 * I * s)
                    + (zp * zm - (x3 ** 2).scale(2)) * ws * e3 + zs ** 2 * wo * e3)

        return items(
            lambda sg: -(S.pm(sg)[0] ** 2).scale(3) + (x3 * S.pm(sg)[0] * S.pm(sg)[1] * e3).scale(2)
            - (S.pm(sg)[0] ** 2 * e12).scale(2 * I * sg),
            (x3 ** 2).scale(6) - (zp * zm).scale(3) + (sym * x3 * e3).scale(3),
            third,
        )
    raise ValueError(k)


def _label(idx, tag):
    rec = list(idx) if isinstance(idx, tuple) else ["item", idx]
    return GTLabel((), tag, ((str(rec[0]), int(rec[1])),))


def write(name, meta, elems):
    B = Basis(meta, tuple(BasisElement(p, _label(idx, tag)) for p, idx, tag in elems))
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(B.to_json(), indent=1) + "\n")
    print(f"{path.name}: {len(B)} elements")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for k in range(3):
        write(f"hodge_m3_k{k}_s1", {"kind": "hodge", "m": 3, "k": k, "s": 1, "mode": "complex"}, b13(k))
        write(f"hodge_m3_k{k}_s2", {"kind": "hodge", "m": 3, "k": k, "s": 2, "mode": "complex"}, b23(k))
        write(f"hodge_m4_k{k}_s2", {"kind": "hodge", "m": 4, "k": k, "s": 2, "mode": "complex"}, b24(k))
    for k in (1, 2):
        write(f"gmt_piece_m3_k{k}_s1", {"kind": "gmt_piece", "m": 3, "k": k, "s": 1, "mode": "complex"}, v13(k))


if __name__ == "__main__":
    main()
