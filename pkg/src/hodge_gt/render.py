"""Text and LaTeX rendering of polynomials.

With ``shorthand=True`` (and m >= 2) the first two coordinates are rewritten
exactly in terms of z± = x1 ± i x2 and w± = e1 ± i e2; e12 is kept as is.
Display only; nothing parses this output.
"""

from __future__ import annotations

from math import comb

from .clifford import blade_indices
from .scalar import ONE, Scalar

_HALF = Scalar(1) / 2
_I_HALF = Scalar(0, 1) / 2

# blade bits {1,2} -> list of (tag, factor)
_LOW_BLADES = {
    0: [("", ONE)],
    1: [("w+", _HALF), ("w-", _HALF)],
    2: [("w+", -_I_HALF), ("w-", _I_HALF)],
    3: [("e12", ONE)],
}


def _zw_terms(p):
    out: dict = {}
    for (e, b), c in p.terms.items():
        a, bb = e[0], e[1]
        # x1^a x2^bb = 2^-(a+bb) (z+ + z-)^a (-i)^bb (z+ - z-)^bb
        base = c * Scalar(0, -1) ** bb / Scalar(2 ** (a + bb))
        zpoly: dict = {}
        for p1 in range(a + 1):
            for q1 in range(bb + 1):
                coef = comb(a, p1) * comb(bb, q1) * (-1) ** (bb - q1)
                key = (p1 + q1, a - p1 + bb - q1)
                zpoly[key] = zpoly.get(key, 0) + coef
        for tag, f in _LOW_BLADES[b & 3]:
            for (zp, zm), coef in zpoly.items():
                if not coef:
                    continue
                key = (zp, zm, e[2:], tag, b & ~3)
                v = base * f * coef
                out[key] = out[key] + v if key in out else v
    return {k: v for k, v in out.items() if v}


def _coef_str(c: Scalar, latex: bool) -> tuple[str, bool]:
    """Returns (text, is_unit) where is_unit means |c| == 1 real and text is '' or '-'."""
    if c == ONE:
        return "", True
    if c == -ONE:
        return "-", True
    if c.is_real():
        q = c.re
        if latex and q.denominator != 1:
            sign = "-" if q < 0 else ""
            return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}", False
        return str(q), False
    if not c.re:
        q = c.im
        if abs(q) == 1:
            return ("i" if q > 0 else "-i"), False
        sign = "-" if q < 0 else ""
        if q.denominator == 1:
            return f"{q}i", False
        if latex:
            return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}i", False
        return f"{sign}({abs(q)})i", False
    s = str(c)
    return f"({s})", False


def _factor(name: str, power: int, latex: bool) -> str:
    if power == 1:
        return name
    return f"{name}^{{{power}}}" if latex else f"{name}^{power}"


def _names(latex: bool):
    if latex:
        return {"z+": "z_{+}", "z-": "z_{-}", "w+": "w_{+}", "w-": "w_{-}"}
    return {"z+": "z+", "z-": "z-", "w+": "w+", "w-": "w-"}


def _blade_name(indices, latex: bool) -> str:
    digits = "".join(str(i) for i in indices)
    return f"e_{{{digits}}}" if latex else f"e{digits}"


def _var_name(j: int, latex: bool) -> str:
    return f"x_{{{j}}}" if latex else f"x{j}"


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _render(p, shorthand: bool, latex: bool) -> str:
    sep = " " if not latex else " "
    names = _names(latex)
    parts = []
    if shorthand and p.dim >= 2:
        terms = _zw_terms(p)

        def order(item):
            zp, zm, rest, tag, hi = item[0]
            return (zp + zm + sum(rest), -zp, -zm, tuple(-r for r in rest), tag, hi)

        for (zp, zm, rest, tag, hi), c in sorted(terms.items(), key=order):
            factors = []
            if zp:
                factors.append(_factor(names["z+"], zp, latex))
            if zm:
                factors.append(_factor(names["z-"], zm, latex))
            for j, a in enumerate(rest, start=3):
                if a:
                    factors.append(_factor(_var_name(j, latex), a, latex))
            hi_idx = blade_indices(hi)
            if tag == "e12":
                factors.append(_blade_name([1, 2] + hi_idx, latex))
            else:
                if tag:
                    factors.append(names[tag])
                if hi_idx:
                    factors.append(_blade_name(hi_idx, latex))
            parts.append(_term(c, factors, sep, latex))
    else:
        for (e, b), c in p.items():
            factors = [_factor(_var_name(j, latex), a, latex) for j, a in enumerate(e, 1) if a]
            if b:
                factors.append(_blade_name(blade_indices(b), latex))
            parts.append(_term(c, factors, sep, latex))
    return _join(parts)


def _term(c: Scalar, factors: list[str], sep: str, latex: bool) -> str:
    cs, unit = _coef_str(c, latex)
    if not factors:
        return cs + "1" if unit else cs
    body = sep.join(factors)
    if unit:
        return cs + body
    return cs + sep + body if not latex else cs + body


def to_text(p, shorthand: bool = True) -> str:
    return _render(p, shorthand, latex=False)


def to_latex(p, shorthand: bool = True) -> str:
    return _render(p, shorthand, latex=True)
