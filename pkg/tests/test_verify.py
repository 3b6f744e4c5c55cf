import random

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from hodge_gt.gt_basis import gt_basis_hodge
from hodge_gt.mvpoly import MVPolynomial, w, z
from hodge_gt.sampling import random_poly
from hodge_gt.scalar import Scalar
from hodge_gt.verify import (
    SizeCapExceeded,
    blades_of_grade,
    check_basis,
    dim_P,
    domain_basis,
    fischer_inner,
    gram,
    harmonic_dim,
    in_span,
    is_linearly_independent,
    kernel_dim_dirac_minus,
    kernel_dim_dirac_plus,
    l2_inner,
    match_up_to_scalar,
    monomial_exponents,
    nullspace_dim_gmt,
    nullspace_dim_hodge,
    rank,
    scalar_ratio,
    size_cap,
    span_equal,
    sphere_moment,
)

E = MVPolynomial.blade
X = MVPolynomial.var


def test_fischer_examples():
    e3 = E(3, [3])
    assert fischer_inner(e3, e3) == Scalar(1)
    assert fischer_inner(w(3, 1), e3) == Scalar(0)
    assert fischer_inner(w(3, 1), w(3, 1)) == Scalar(2)
    assert fischer_inner(w(3, 1), w(3, -1)) == Scalar(0)
    assert fischer_inner(X(3, 1) ** 2, X(3, 1) ** 2) == Scalar(2)
    with pytest.raises(ValueError):
        fischer_inner(e3, E(2, [1]))


def test_sphere_moments():
    for m in range(2, 6):
        alpha = (2,) + (0,) * (m - 1)
        assert sphere_moment(alpha) == mpq(1, m)
    assert sphere_moment((4, 0, 0)) == mpq(1, 5)
    assert sphere_moment((1, 1, 0)) == 0
    # integral of (x1^2 + x2^2 + x3^2)^2 is 1
    total = 3 * sphere_moment((4, 0, 0)) + 6 * sphere_moment((2, 2, 0))
    assert total == 1


def test_l2_examples():
    assert l2_inner(w(3, 1), w(3, -1)) == Scalar(0)
    assert l2_inner(E(3, [3]), E(3, [3])) == Scalar(1)
    assert l2_inner(X(3, 1), X(3, 1)) == Scalar(mpq(1, 3))
    # mixed degrees can pair under L2 but not under Fischer
    assert l2_inner(MVPolynomial.constant(3, 1), X(3, 1) ** 2) == Scalar(mpq(1, 3))
    assert fischer_inner(MVPolynomial.constant(3, 1), X(3, 1) ** 2) == Scalar(0)


@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(0, 3))
def test_inner_products_hermitian_positive(seed, m, k):
    rng = random.Random(seed)
    P = random_poly(m, k, range(m + 1), rng)
    Q = random_poly(m, k, range(m + 1), rng)
    for ip in (fischer_inner, l2_inner):
        assert ip(P, Q) == ip(Q, P).conjugate()
        if P:
            assert ip(P, P).is_positive()


def test_gram_reports():
    B = gt_basis_hodge(3, 0, 1)
    rep = gram(B, "fischer")
    assert rep.ok and rep.size == 3 and rep.meta["s"] == 1
    assert gram(gt_basis_hodge(4, 2, 2), "l2").ok
    polys = B.polys()
    polys[0] = polys[0] + polys[2]
    bad = gram(polys, "fischer")
    assert not bad.ok and bad.bad_pairs and bad.max_offdiag > 0
    assert bad.to_json()["ok"] is False
    with pytest.raises(ValueError):
        gram(polys, "sobolev")
    assert not gram([MVPolynomial.zero(3)], "fischer").ok


def test_oracle_dimensions():
    assert nullspace_dim_hodge(3, 0, 1) == 3
    for k in range(5):
        assert nullspace_dim_hodge(3, k, 1) == 2 * k + 3
    for m in (2, 3, 4):
        for k in range(1, 3):
            assert nullspace_dim_hodge(m, k, 0) == 0
            assert nullspace_dim_hodge(m, k, m) == 0
    assert nullspace_dim_gmt(3, 1, []) == 0
    for s in range(4):
        assert nullspace_dim_gmt(3, 2, [s]) == nullspace_dim_hodge(3, 2, s)
    assert nullspace_dim_gmt(3, 1, [0, 1, 2]) == 13
    assert nullspace_dim_gmt(3, 1, range(4)) == 16


def test_oracle_basis_and_bookkeeping():
    n, basis = nullspace_dim_hodge(3, 1, 1, with_basis=True)
    assert n == 5 and len(basis) == 5
    assert span_equal(basis, gt_basis_hodge(3, 1, 1).polys())
    assert len(monomial_exponents(4, 3)) == 20
    assert len(blades_of_grade(5, 2)) == 10
    assert dim_P(4, 3, 2) == 6 * 20
    assert dim_P(3, 2) == 8 * 6
    assert len(domain_basis(3, 2, [1, 2])) == 2 * 3 * 6
    assert kernel_dim_dirac_plus(3, 0, 3) == 1
    assert kernel_dim_dirac_minus(3, 2, 0) == 6
    assert [harmonic_dim(3, n) for n in range(4)] == [1, 3, 5, 7]


def test_linear_algebra_helpers():
    B = gt_basis_hodge(3, 2, 1).polys()
    assert span_equal(B, B)
    assert not span_equal(B, B[:-1])
    assert rank(B + [B[0].scale(Scalar(2, 1))]) == len(B)
    assert is_linearly_independent(B)
    assert not is_linearly_independent(B + [B[0] + B[1]])
    assert in_span(B[0] + B[1].scale(3), B)
    assert not in_span(B[0], B[1:])
    assert scalar_ratio(B[0].scale(Scalar(0, 3)), B[0]) == Scalar(0, 3)
    assert scalar_ratio(B[0], B[1]) is None
    ok, pairs = match_up_to_scalar(list(reversed(B)), B)
    assert ok and [p[1] for p in pairs] == list(reversed(range(len(B))))
    ok, _ = match_up_to_scalar(B[:-1], B)
    assert not ok


def test_check_basis():
    rep = check_basis(gt_basis_hodge(4, 1, 2))
    assert rep["ok"] and rep["size"] == rep["oracle_dim"] == 16
    from hodge_gt.gt_basis import Basis, BasisElement

    B = gt_basis_hodge(3, 1, 1)
    broken = Basis(B.meta, B.elements[:-1])
    assert not check_basis(broken)["ok"]
    wrong = Basis(B.meta, B.elements[:-1] + (BasisElement(X(3, 1) * E(3, [2]), B[0].label),))
    assert any("annihilated" in p for p in check_basis(wrong)["problems"])


def test_size_cap(monkeypatch):
    assert size_cap() == 5000
    monkeypatch.setenv("HODGE_GT_SIZE_CAP", "10")
    assert size_cap() == 10
    with pytest.raises(SizeCapExceeded):
        nullspace_dim_hodge(3, 2, 1)
    monkeypatch.setenv("HODGE_GT_SIZE_CAP", "many")
    with pytest.raises(ValueError):
        size_cap()
