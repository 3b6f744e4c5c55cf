"""Catalogue of exact operator identities between D+-, D-, (x^), (x.) and powers of x.

Each :class:`Identity` pairs two :class:`Operator` expressions that must
agree on every polynomial.  The ``on_h`` family only holds on H-spaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .operators import Operator as O, anticommutator, commutator, y_minus, y_plus


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: O
    rhs: O

    def holds_on(self, p) -> bool:
        return self.lhs(p) == self.rhs(p)


def _zero():
    return O.constant(0)


def anticommutator_identities() -> list[Identity]:
    xw, xb, dp, dm = O.x_wedge(), O.x_bullet(), O.dirac_plus(), O.dirac_minus()
    return [
        Identity("{x^, x^} = 0", anticommutator(xw, xw), _zero()),
        Identity("{x., x.} = 0", anticommutator(xb, xb), _zero()),
        Identity("{x^, x.} = x^2", anticommutator(xw, xb), O.x_power(2)),
        Identity("{D+, D+} = 0", anticommutator(dp, dp), _zero()),
        Identity("{D-, D-} = 0", anticommutator(dm, dm), _zero()),
        Identity("{D+, D-} = -Lap", anticommutator(dp, dm), -O.laplacian()),
        Identity("{x., D+} = -A", anticommutator(xb, dp), -O.A()),
        Identity("{x^, D-} = -B", anticommutator(xw, dm), -O.B()),
        Identity("{x., D-} = 0", anticommutator(xb, dm), _zero()),
        Identity("{x^, D+} = 0", anticommutator(xw, dp), _zero()),
    ]


def commutator_identities(j: int) -> list[Identity]:
    """The j-indexed family; the x^(2j) rows need j >= 1.

    The two anticommutator rows carry a minus sign: with x^2 = -|x|^2 one has
    {D+, x^(2j+2)(x.)} = -y+_(2j+2) and {D-, x^(2j+2)(x^)} = -y-_(2j+2).
    """
    xw, xb, dp, dm = O.x_wedge(), O.x_bullet(), O.dirac_plus(), O.dirac_minus()
    A, B = O.A(), O.B()
    shift = O.constant(2 * j + 2)
    x = O.x_power
    out = [
        Identity(f"[D+, x^{2*j+1}(x.)] = x^{2*j}(x^)A", commutator(dp, x(2 * j + 1) @ xb), x(2 * j) @ xw @ A),
        Identity(f"[D+, x^{2*j+1}(x^)] = -x^{2*j}(x^)(A+{2*j+2})", commutator(dp, x(2 * j + 1) @ xw),
                 -(x(2 * j) @ xw @ (A + shift))),
        Identity(f"[D-, x^{2*j+1}(x^)] = x^{2*j}(x.)B", commutator(dm, x(2 * j + 1) @ xw), x(2 * j) @ xb @ B),
        Identity(f"[D-, x^{2*j+1}(x.)] = -x^{2*j}(x.)(B+{2*j+2})", commutator(dm, x(2 * j + 1) @ xb),
                 -(x(2 * j) @ xb @ (B + shift))),
        Identity(f"{{D+, x^{2*j+2}(x.)}} = -y+[{2*j+2}]", anticommutator(dp, x(2 * j + 2) @ xb), -y_plus(j)),
        Identity(f"{{D-, x^{2*j+2}(x^)}} = -y-[{2*j+2}]", anticommutator(dm, x(2 * j + 2) @ xw), -y_minus(j)),
    ]
    if j >= 1:
        out += [
            Identity(f"[D+, x^{2*j}] = -{2*j} x^{2*j-2}(x^)", commutator(dp, x(2 * j)),
                     (-2 * j) * (x(2 * j - 2) @ xw)),
            Identity(f"[D-, x^{2*j}] = -{2*j} x^{2*j-2}(x.)", commutator(dm, x(2 * j)),
                     (-2 * j) * (x(2 * j - 2) @ xb)),
        ]
    return out


def on_h_identities(j: int, m: int, k: int) -> list[Identity]:
    """Identities valid on H_(k-2j-2)^s(R^m); k is the output degree."""
    dp, dm = O.dirac_plus(), O.dirac_minus()
    c = -(2 * j + 2) * (m + 2 * k - 2 * j - 2)
    return [
        Identity(f"D- y+[{2*j+2}] = {c} x^{2*j}(x.)", dm @ y_plus(j), c * (O.x_power(2 * j) @ O.x_bullet())),
        Identity(f"D+ y+[{2*j+2}] = 0", dp @ y_plus(j), _zero()),
        Identity(f"D+ y-[{2*j+2}] = {c} x^{2*j}(x^)", dp @ y_minus(j), c * (O.x_power(2 * j) @ O.x_wedge())),
        Identity(f"D- y-[{2*j+2}] = 0", dm @ y_minus(j), _zero()),
    ]
