import random

import pytest
from hypothesis import given, strategies as st

from hodge_gt.clifford import Multivector
from hodge_gt.mvpoly import MVPolynomial, embed, evaluate, partial_derivative, restrict_last, split_em, w, z
from hodge_gt.sampling import random_poly
from hodge_gt.scalar import I, Scalar

X = MVPolynomial.var
E = MVPolynomial.blade


def test_product_of_monomials():
    assert (X(2, 1) * E(2, [1])) * (X(2, 1) * E(2, [2])) == X(2, 1) ** 2 * E(2, [1, 2])


def test_vector_variable_squares_to_minus_radius():
    xv = MVPolynomial.vector_variable(2)
    assert xv * xv == -MVPolynomial.radius_squared(2)


def test_cancellation_prunes_terms():
    p = X(3, 1) * E(3, [2]) + X(3, 3)
    assert not (p + p.scale(-1))
    assert len(p - p) == 0


@given(st.integers(0, 10**6), st.integers(2, 4))
def test_ring_laws(seed, m):
    rng = random.Random(seed)
    a, b, c = (random_poly(m, rng.randint(0, 3), range(m + 1), rng, n_terms=3) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_partial_derivatives():
    assert partial_derivative(X(3, 1) ** 2 * E(3, [2]), 1) == (X(3, 1) * E(3, [2])).scale(2)
    assert not partial_derivative(X(3, 1) * E(3, [1]), 2)
    zp = z(3, 1)
    assert partial_derivative(zp ** 2 * w(3, 1), 1) == (zp * w(3, 1)).scale(2)
    with pytest.raises(ValueError):
        partial_derivative(X(3, 1), 4)


@given(st.integers(0, 10**6), st.integers(2, 4))
def test_partials_commute(seed, m):
    rng = random.Random(seed)
    p = random_poly(m, 3, range(m + 1), rng)
    i, j = rng.randint(1, m), rng.randint(1, m)
    assert partial_derivative(partial_derivative(p, i), j) == partial_derivative(partial_derivative(p, j), i)


def test_restrict_last():
    assert restrict_last(X(3, 3) * E(3, [3]) + X(3, 1) * E(3, [1])) == X(3, 1) * E(3, [1])
    zp, wp = z(3, 1), w(3, 1)
    elem = -(zp * E(3, [3])) - X(3, 3) * wp
    assert restrict_last(elem) == -(zp * E(3, [3]))
    c = MVPolynomial.constant(3, 5)
    assert restrict_last(c) == c


def test_split_em():
    zp = z(3, 1)
    u, v = split_em(-(zp * E(3, [3])))
    assert not u and v == -zp
    u, v = split_em(w(3, 1))
    assert u == w(3, 1) and not v
    u, v = split_em(E(3, [1, 3]))
    assert not u and v == E(3, [1])
    with pytest.raises(ValueError):
        split_em(X(3, 3))


@given(st.integers(0, 10**6), st.integers(2, 5))
def test_split_reconstructs(seed, m):
    rng = random.Random(seed)
    p = random_poly(m, 2, range(m + 1), rng, nvars=m - 1)
    p = p + random_poly(m, 2, range(m + 1), rng, nvars=m - 1) * E(m, [m])
    u, v = split_em(p)
    assert u + v * E(m, [m]) == p
    assert not u.uses_generator(m) and not v.uses_generator(m)


def test_evaluate():
    assert evaluate(X(3, 1) * E(3, [1]), [2, 0, 0]) == Multivector.blade(3, [1], 2)
    val = evaluate(z(2, 1) * w(2, 1), [1, 2])
    expected = (Multivector.blade(2, [1]) + Multivector.blade(2, [2]) * I) * Scalar(1, 2)
    assert val == expected
    assert not evaluate(MVPolynomial.zero(3), [7, 1, 2])
    with pytest.raises(ValueError):
        evaluate(X(3, 1), [1, 2])


def test_embed():
    p = w(2, 1)
    q = embed(p, 3)
    assert q.dim == 3 and restrict_last(q) == q
    assert len(q) == len(p)
    with pytest.raises(ValueError):
        embed(q, 2)


def test_homogeneity_and_grade_predicates():
    p = X(3, 1) * X(3, 2) * E(3, [1, 2])
    assert p.is_homogeneous(2) and not p.is_homogeneous(1)
    assert p.is_grade(2) and not p.is_grade(1)
    assert not (p + X(3, 1)).is_homogeneous()


def test_json_round_trip():
    p = (z(3, 1) ** 2 * w(3, -1)).scale(Scalar("1/3")) + X(3, 3) * E(3, [3])
    data = p.to_json()
    assert data["algebra"] == "complex"
    assert MVPolynomial.from_json(data) == p
    with pytest.raises(ValueError):
        p.to_json("real")
    r = X(3, 1) * E(3, [2])
    assert MVPolynomial.from_json(r.to_json("real")) == r


def test_text_rendering_uses_shorthand():
    from hodge_gt.render import to_latex, to_text

    elem = -(z(3, 1) * E(3, [3])) - X(3, 3) * w(3, 1)
    assert to_text(elem) == "-z+ e3 - x3 w+"
    assert to_latex(z(3, 1) ** 2 * w(3, 1) * E(3, [3])) == "z_{+}^{2} w_{+} e_{3}"
    assert to_text(X(3, 1) * E(3, [1]), shorthand=False) == "x1 e1"
