"""Acceptance criteria 1-12.

Every comparison is exact (rational / Gaussian-rational arithmetic), so the
tolerance is pinned at zero throughout.  Each test prints one PASS/FAIL line.
"""

import random
from math import comb

from hodge_gt.ck import ck_extend_generic, ck_extend_hodge, restrict_to_initial
from hodge_gt.fischer import decompose_ker, verify_fischer_full
from hodge_gt.gt_basis import dual_basis, gt_basis_hodge, harmonic_gt_basis, riesz_basis
from hodge_gt.identities import anticommutator_identities, commutator_identities, on_h_identities
from hodge_gt.mvpoly import embed
from hodge_gt.operators import dirac_minus, dirac_plus, laplacian
from hodge_gt.reference import load_golden
from hodge_gt.sampling import random_h_element, random_initial_datum, random_poly
from hodge_gt.special import CKMultiplier, X_check, X_hat, X_poly, Y_check, Y_hat, gmt_factor
from hodge_gt.verify import gram, harmonic_dim, match_up_to_scalar, nullspace_dim_hodge, span_equal

TOL = 0  # exact arithmetic; no tolerance anywhere
MAX_M, MAX_K = 5, 4


def verdict(n: int, ok: bool, detail: str):
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} (tolerance {TOL}, exact)")
    assert ok, detail


def matrix():
    for m in range(2, MAX_M + 1):
        for k in range(MAX_K + 1):
            for s in range(m + 1):
                yield m, k, s


def golden_match(name, built):
    G = load_golden(name)
    ok, _ = match_up_to_scalar(built, G.polys())
    return ok, len(G)


def test_criterion_01_golden_dim3_vectors():
    sizes, failures = [], []
    for k in range(3):
        built = gt_basis_hodge(3, k, 1).polys()
        ok, size = golden_match(f"hodge_m3_k{k}_s1", built)
        sizes.append(len(built))
        if not ok:
            failures.append(k)
    verdict(1, not failures and sizes == [3, 5, 7],
            f"B_k^(1,3) for k=0,1,2 match listings up to scalars; sizes {sizes}")


def test_criterion_02_golden_dim3_duals():
    failures = []
    for k in range(3):
        name = f"hodge_m3_k{k}_s2"
        dual = dual_basis(gt_basis_hodge(3, k, 1)).polys()
        ok1, _ = golden_match(name, dual)
        ok2, _ = golden_match(name, gt_basis_hodge(3, k, 2).polys())
        if not (ok1 and ok2):
            failures.append(k)
    verdict(2, not failures, f"B_k^(2,3) = B_k^(1,3) e123 and listings match for k=0,1,2; failures {failures}")


def test_criterion_03_golden_dim4_bivectors():
    sizes, failures = [], []
    for k in range(3):
        built = gt_basis_hodge(4, k, 2).polys()
        ok, size = golden_match(f"hodge_m4_k{k}_s2", built)
        sizes.append((len(built), size))
        if not ok or len(built) != size:
            failures.append(k)
    verdict(3, not failures and sizes[0] == (6, 6),
            f"B_k^(2,4) for k=0,1,2 match listings; (built, listed) sizes {sizes}")


def test_criterion_04_golden_gmt_pieces():
    failures = []
    for k in (1, 2):
        V = gmt_factor(k, 1, 3)
        built = [V(p) for p in gt_basis_hodge(3, k - 1, 1).polys()]
        ok, _ = golden_match(f"gmt_piece_m3_k{k}_s1", built)
        if not ok:
            failures.append(k)
    verdict(4, not failures, f"V_1^(1,3) and V_2^(1,3) match listings; failures {failures}")


def test_criterion_05_membership():
    bad, count = [], 0
    for m, k, s in matrix():
        for mode in ("complex", "real"):
            for p in gt_basis_hodge(m, k, s, mode=mode).polys():
                count += 1
                if dirac_plus(p) or dirac_minus(p) or not p.is_grade(s) or not p.is_homogeneous(k):
                    bad.append((m, k, s, mode))
    verdict(5, not bad, f"D+ P = D- P = 0 for {count} elements, m<={MAX_M}, k<={MAX_K}, both modes; bad {bad[:5]}")


def test_criterion_06_orthogonality():
    bad, count = [], 0
    for m, k, s in matrix():
        for mode in ("complex", "real"):
            B = gt_basis_hodge(m, k, s, mode=mode)
            for kind in ("fischer", "l2"):
                count += 1
                rep = gram(B, kind)
                if not rep.ok:
                    bad.append((m, k, s, mode, kind))
    verdict(6, not bad, f"{count} Gram matrices exactly diagonal with positive diagonal; bad {bad[:5]}")


def test_criterion_07_oracle_cardinality():
    bad = []
    for m, k, s in matrix():
        n = len(gt_basis_hodge(m, k, s))
        oracle = nullspace_dim_hodge(m, k, s)
        if n != oracle or (k >= 1 and s in (0, m) and oracle != 0):
            bad.append((m, k, s, n, oracle))
    dim3 = [nullspace_dim_hodge(3, k, 1) for k in range(5)]
    ok3 = dim3 == [2 * k + 3 for k in range(5)]
    verdict(7, not bad and ok3, f"|B| = oracle for all cells; dim H_k^1(R^3) = {dim3}; bad {bad[:5]}")


def test_criterion_08_ck_consistency():
    rng = random.Random(8)
    bad, count = [], 0
    for m in range(2, 5):
        for k in range(4):
            for s in range(m + 1):
                for _ in range(100):
                    d = random_initial_datum(m, k, s, rng)
                    p = ck_extend_hodge(d)
                    count += 1
                    if p != ck_extend_generic(d.polynomial()):
                        bad.append(("extend", m, k, s))
                    elif p and restrict_to_initial(p, s, k) != d:
                        bad.append(("round trip", m, k, s))
    verdict(8, not bad, f"{count} random initial data: hodge CK == series CK and restrict o extend == id; bad {bad[:5]}")


def test_criterion_09_multiplier_oracle():
    rng = random.Random(9)
    bad, checks = [], 0
    for m in (3, 4):
        for k in range(3):
            for s in range(m):
                for _ in range(2):
                    P = embed(random_h_element(m - 1, k, s, rng), m)
                    mults = [CKMultiplier("X", m, k, j, s) for j in range(4)]
                    mults += [f(j, s, k, m) for j in range(1, 4) for f in (X_hat, X_check)]
                    mults += [f(j, s, k, m) for j in range(2) for f in (Y_hat, Y_check)]
                    for M in mults:
                        checks += 1
                        if M(P) != ck_extend_generic(M.initial_factor()(P)):
                            bad.append((M.variant, m, k, M.j, s))
                    for j in range(1, 4):
                        checks += 1
                        if X_hat(j, s, k, m)(P) + X_check(j, s, k, m)(P) != X_poly(k, j, m) * P:
                            bad.append(("hat+check", m, k, j, s))
                    for j in range(2):
                        checks += 1
                        lhs = Y_hat(j, s, k, m)(P) + Y_check(j, s, k, m)(P)
                        if lhs != (X_poly(k, 2 * j + 2, m) * P).scale(m + 1 + 2 * k + 2 * j):
                            bad.append(("Yhat+Ycheck", m, k, j, s))
    verdict(9, not bad, f"{checks} multiplier / sum-identity checks against series CK; bad {bad[:5]}")


def test_criterion_10_operator_identities():
    rng = random.Random(10)
    ids = anticommutator_identities() + [i for j in range(3) for i in commutator_identities(j)]
    bad = []
    for ident in ids:
        for t in range(50):
            m = rng.randint(2, 4)
            grades = range(m + 1) if t % 2 else [rng.randint(0, m)]
            p = random_poly(m, rng.randint(0, 4), grades, rng)
            if not ident.holds_on(p):
                bad.append(ident.name)
                break
    # the y-operator identities hold on H-spaces
    n_h = 0
    for j in range(2):
        for t in range(50):
            m = rng.randint(2, 4)
            kk = rng.randint(0, 2)
            s = rng.randint(0, m)
            p = random_h_element(m, kk, s, rng)
            for ident in on_h_identities(j, m, kk + 2 * j + 2):
                n_h += 1
                if not ident.holds_on(p):
                    bad.append(ident.name)
    verdict(10, not bad, f"{len(ids)} identities x 50 random polynomials, plus {n_h} checks on H-spaces; bad {bad[:5]}")


def test_criterion_11_fischer_dimensions():
    bad = []
    for m in range(2, 5):
        for k in range(4):
            rep = verify_fischer_full(m, k)
            expected = 2 ** m * comb(k + m - 1, m - 1)
            if not rep.ok or rep.total != expected or rep.rank != expected:
                bad.append(("full", m, k, rep.total, expected))
            for s in range(m + 1):
                for sign in "+-":
                    chk = decompose_ker(sign, m, k, s).check()
                    if not chk["ok"]:
                        bad.append(("ker", sign, m, k, s, chk["dim"], chk["oracle_dim"]))
    verdict(11, not bad, f"full Fischer counts and kernel decompositions for m<=4, k<=3; bad {bad[:5]}")


def test_criterion_12_riesz_and_harmonic():
    bad = []
    for m in range(2, 5):
        for k in range(4):
            if not span_equal(riesz_basis(m, k).polys(), gt_basis_hodge(m, k, 1).polys()):
                bad.append(("riesz", m, k))
        for n in range(5):
            H = harmonic_gt_basis(m, n).polys()
            if len(H) != harmonic_dim(m, n) or any(laplacian(p) or not p.is_homogeneous(n) for p in H):
                bad.append(("harmonic", m, n))
    verdict(12, not bad, f"Riesz span equals B_k^(1,m) for m<=4, k<=3; harmonic bases exact and complete; bad {bad[:5]}")
