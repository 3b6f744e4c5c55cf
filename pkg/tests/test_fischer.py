import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from hodge_gt.fischer import (
    alternating_words,
    decompose_ker,
    proj_minus,
    proj_plus,
    split_minus,
    split_plus,
    verify_fischer_full,
    word_admissible,
)
from hodge_gt.mvpoly import MVPolynomial, w, z
from hodge_gt.operators import dirac_minus, dirac_plus, x_bullet, x_wedge
from hodge_gt.sampling import random_poly
from hodge_gt.verify import kernel_dim_dirac_minus, kernel_dim_dirac_plus


def rand_graded(seed, m, k, s):
    return random_poly(m, k, [s], random.Random(seed))


def test_projection_fixes_kernel_elements():
    p = z(3, 1) * w(3, 1)
    assert not dirac_plus(p)
    assert proj_plus(p) == p
    q = MVPolynomial.blade(3, [1, 2, 3]) * MVPolynomial.var(3, 1)
    assert not dirac_minus(MVPolynomial.blade(3, [1]))
    assert proj_minus(MVPolynomial.blade(3, [1])) == MVPolynomial.blade(3, [1])
    assert proj_plus(q) == q


def test_projection_kills_complement():
    p = x_bullet(w(3, 1))
    assert p == -z(3, 1)
    assert not proj_plus(p)


def test_projection_rejects_mixed_input():
    with pytest.raises(ValueError):
        proj_plus(MVPolynomial.constant(3, 1) + MVPolynomial.var(3, 1))
    with pytest.raises(ValueError):
        proj_minus(MVPolynomial.blade(3, [1]) + MVPolynomial.blade(3, [1, 2]))


@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(0, 3), st.data())
def test_plus_splitting(seed, m, k, data):
    s = data.draw(st.integers(0, m))
    p = rand_graded(seed, m, k, s)
    pp, q = split_plus(p)
    assert not dirac_plus(pp)
    assert proj_plus(pp) == pp
    assert not dirac_plus(q)
    assert p == pp + x_bullet(q)
    assert pp == proj_plus(p)


@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(0, 3), st.data())
def test_minus_splitting(seed, m, k, data):
    s = data.draw(st.integers(0, m))
    p = rand_graded(seed, m, k, s)
    pm, q = split_minus(p)
    assert not dirac_minus(pm)
    assert proj_minus(pm) == pm
    assert not dirac_minus(q)
    assert p == pm + x_wedge(q)


def test_decompose_small_cases():
    d = decompose_ker("+", 3, 0, 1)
    assert d.dim == 3 and len(d.pieces) == 1
    for m in (2, 3):
        for k in range(3):
            d = decompose_ker("+", m, k, 0)
            assert [p.source for p in d.pieces] == [(k, 0)]
            assert d.check()["ok"]
            d = decompose_ker("-", m, k, 0)
            assert d.dim == comb(k + m - 1, m - 1)


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_decompose_matches_oracle(m, k):
    for s in range(m + 1):
        for sign in "+-":
            rep = decompose_ker(sign, m, k, s).check()
            assert rep["ok"], rep
            oracle = kernel_dim_dirac_plus(m, k, s) if sign == "+" else kernel_dim_dirac_minus(m, k, s)
            assert rep["dim"] == oracle


def test_decompose_errors():
    with pytest.raises(ValueError):
        decompose_ker("*", 3, 1, 1)
    with pytest.raises(ValueError):
        decompose_ker("+", 3, 1, 4)


def test_decompose_detects_bad_provider():
    from hodge_gt.gt_basis import gt_basis_hodge

    def drop_one(m, k, s):
        return gt_basis_hodge(m, k, s).polys()[1:]

    assert not decompose_ker("+", 3, 2, 1, basis_provider=drop_one).check()["ok"]


def test_alternating_words():
    assert alternating_words(0) == [()]
    assert alternating_words(1) == [("^",), (".",)]
    assert alternating_words(3) == [("^", ".", "^"), (".", "^", ".")]
    assert word_admissible((), 0, 3)
    assert not word_admissible(("^", "."), 0, 3)
    assert word_admissible((".", "^"), 0, 3)
    assert not word_admissible(("^",), 3, 3)


def test_fischer_counts():
    rep = verify_fischer_full(2, 0)
    assert rep.total == 4 and rep.ok
    assert [p[3] for p in rep.pieces] == [1, 2, 1]
    rep = verify_fischer_full(3, 1)
    assert rep.total == 24 and rep.ok
    for m in (2, 3, 4, 5):
        assert verify_fischer_full(m, 0, check_rank=False).total == 2 ** m


def test_fischer_report_json():
    data = verify_fischer_full(3, 2).to_json()
    assert data["ok"] and data["expected"] == 8 * comb(4, 2)
    assert all(set(p) == {"s", "k", "word", "dim"} for p in data["pieces"])
