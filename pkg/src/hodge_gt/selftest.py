"""Property matrix behind ``hodge-gt selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .ck import ck_extend_generic, ck_extend_hodge, restrict_to_initial
from .gt_basis import gt_basis_hodge
from .identities import anticommutator_identities, commutator_identities
from .operators import dirac_minus, dirac_plus
from .reference import golden_names, load_golden
from .sampling import random_initial_datum, random_poly
from .special import gmt_factor
from .verify import gram, match_up_to_scalar, nullspace_dim_hodge


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SelftestReport:
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in self.results]}


def _identities(max_m: int, rng: random.Random, samples: int) -> CheckResult:
    ids = anticommutator_identities() + [i for j in range(3) for i in commutator_identities(j)]
    for ident in ids:
        for _ in range(samples):
            m = rng.randint(2, max_m)
            p = random_poly(m, rng.randint(0, 4), range(m + 1), rng)
            if not ident.holds_on(p):
                return CheckResult("operator identities", False, ident.name)
    return CheckResult("operator identities", True, f"{len(ids)} identities x {samples} samples")


def _ck(max_m: int, rng: random.Random, samples: int) -> CheckResult:
    for m in range(2, max_m + 1):
        for k in range(4):
            for s in range(m + 1):
                for _ in range(samples):
                    d = random_initial_datum(m, k, s, rng)
                    p = ck_extend_hodge(d)
                    if p != ck_extend_generic(d.polynomial()):
                        return CheckResult("CK consistency", False, f"m={m} k={k} s={s}")
                    if p and restrict_to_initial(p, s, k) != d:
                        return CheckResult("CK consistency", False, f"round trip m={m} k={k} s={s}")
    return CheckResult("CK consistency", True)


def _bases(max_m: int, max_k: int, corrupt: bool) -> CheckResult:
    for m in range(2, max_m + 1):
        for k in range(max_k + 1):
            for s in range(m + 1):
                polys = gt_basis_hodge(m, k, s).polys()
                if corrupt and polys and (m, k, s) == (3, 1, 1):
                    polys[0] = polys[0] + polys[1]
                if len(polys) != nullspace_dim_hodge(m, k, s):
                    return CheckResult("bases", False, f"cardinality m={m} k={k} s={s}")
                if any(dirac_plus(p) or dirac_minus(p) for p in polys):
                    return CheckResult("bases", False, f"membership m={m} k={k} s={s}")
                for kind in ("fischer", "l2"):
                    if not gram(polys, kind).ok:
                        return CheckResult("bases", False, f"{kind} Gram m={m} k={k} s={s}")
    return CheckResult("bases", True, f"m <= {max_m}, k <= {max_k}")


def _golden() -> CheckResult:
    for name in golden_names():
        G = load_golden(name)
        meta = G.meta
        if meta["kind"] == "gmt_piece":
            V = gmt_factor(meta["k"], meta["s"], meta["m"])
            built = [V(p) for p in gt_basis_hodge(meta["m"], meta["k"] - 1, meta["s"]).polys()]
        else:
            built = gt_basis_hodge(meta["m"], meta["k"], meta["s"]).polys()
        ok, _ = match_up_to_scalar(built, G.polys())
        if not ok:
            return CheckResult("golden listings", False, name)
    return CheckResult("golden listings", True)


def run_selftest(quick: bool = False, inject_fault: bool = False, seed: int = 0,
                 log: Callable[[str], None] | None = None) -> SelftestReport:
    rng = random.Random(seed)
    max_m = 3 if quick else 4
    samples = 10 if quick else 30
    report = SelftestReport()
    for check in (
        lambda: _identities(max_m, rng, samples),
        lambda: _ck(max_m, rng, 5 if quick else 20),
        lambda: _bases(max_m if quick else 5, 3 if quick else 4, inject_fault),
        _golden,
    ):
        r = check()
        report.results.append(r)
        if log:
            log(f"{'PASS' if r.ok else 'FAIL'}  {r.name}  {r.detail}".rstrip())
    return report
