import random

import pytest
from hypothesis import given, strategies as st

from hodge_gt.clifford import (
    Multivector,
    blade_mask,
    blade_product,
    clifford_conjugate,
    geometric_product,
    grade_projection,
    hermitian_bar,
    inner_bullet,
    outer_wedge,
    pseudoscalar,
    right_mul_eM,
    scalar_part,
)
from hodge_gt.scalar import I, Scalar


def e(m, *idx):
    return Multivector.blade(m, idx)


def one(m):
    return Multivector.scalar(m, 1)


def random_mv(m, rnd, grade=None):
    terms = {}
    for _ in range(4):
        b = rnd.randrange(1 << m)
        if grade is not None:
            b = blade_mask(rnd.sample(range(1, m + 1), grade))
        terms[b] = Scalar(rnd.randint(-3, 3), rnd.randint(-3, 3))
    return Multivector(m, terms)


class TestScalar:
    def test_arithmetic_is_exact(self):
        a = Scalar("1/3", "1/2")
        assert a + a == Scalar("2/3", 1)
        assert a * a.inverse() == Scalar(1)
        assert (a * a.conjugate()).is_real()

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Scalar(0.5)

    def test_reduced_denominators(self):
        assert str(Scalar("2/4")) == "1/2"


class TestGeometricProduct:
    def test_generator_squares_to_minus_one(self):
        assert e(3, 1) * e(3, 1) == Multivector.scalar(3, -1)

    def test_anticommutation(self):
        assert e(3, 1) * e(3, 2) == e(3, 1, 2)
        assert e(3, 2) * e(3, 1) == -e(3, 1, 2)

    def test_w_plus_times_w_minus(self):
        wp = e(2, 1) + e(2, 2) * I
        wm = e(2, 1) - e(2, 2) * I
        assert wp * wm == Multivector.scalar(2, -2) + e(2, 1, 2) * Scalar(0, -2)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            geometric_product(e(2, 1), e(3, 1))

    @given(st.integers(0, 10**6), st.integers(1, 5))
    def test_associative_and_distributive(self, seed, m):
        rnd = random.Random(seed)
        a, b, c = (random_mv(m, rnd) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    def test_blade_product_sign_table(self):
        assert blade_product(0b01, 0b01) == (-1, 0)
        assert blade_product(0b10, 0b01) == (-1, 0b11)
        assert blade_product(0b001, 0b111) == (-1, 0b110)


class TestInnerOuter:
    def test_bullet_examples(self):
        assert inner_bullet(e(3, 1), e(3, 1)) == Multivector.scalar(3, -1)
        assert not inner_bullet(e(3, 1), e(3, 2))
        assert inner_bullet(e(3, 1), e(3, 1, 2)) == -e(3, 2)

    def test_wedge_examples(self):
        assert outer_wedge(e(3, 1), e(3, 2)) == e(3, 1, 2)
        assert not outer_wedge(e(3, 1), e(3, 1))
        assert not outer_wedge(e(3, 1), e(3, 1, 2))

    def test_requires_vector(self):
        with pytest.raises(ValueError):
            inner_bullet(e(3, 1, 2), e(3, 1))
        with pytest.raises(ValueError):
            outer_wedge(one(3), e(3, 1))

    @given(st.integers(0, 10**6), st.integers(1, 5), st.data())
    def test_split_of_product(self, seed, m, data):
        rnd = random.Random(seed)
        s = data.draw(st.integers(0, m))
        u = random_mv(m, rnd, grade=1)
        v = random_mv(m, rnd, grade=s)
        bullet, wedge = inner_bullet(u, v), outer_wedge(u, v)
        assert bullet + wedge == u * v
        assert bullet.grades() <= {s - 1}
        assert wedge.grades() <= {s + 1}

    def test_bullet_of_scalar_and_wedge_of_top(self):
        u = e(4, 2) + e(4, 3) * 5
        assert not inner_bullet(u, one(4) * 7)
        assert not outer_wedge(u, pseudoscalar(4))


class TestConjugations:
    def test_clifford_conjugate_signs(self):
        assert clifford_conjugate(one(3)) == one(3)
        assert clifford_conjugate(e(3, 1)) == -e(3, 1)
        assert clifford_conjugate(e(3, 1, 2)) == -e(3, 1, 2)

    def test_hermitian_bar(self):
        assert hermitian_bar(e(3, 3)) == -e(3, 3)
        assert hermitian_bar(e(3, 1) + e(3, 2) * I) == -e(3, 1) + e(3, 2) * I
        assert hermitian_bar(one(3) * I) == one(3) * Scalar(0, -1)

    @given(st.integers(0, 10**6), st.integers(1, 5))
    def test_conjugate_is_anti_automorphism(self, seed, m):
        rnd = random.Random(seed)
        a, b = random_mv(m, rnd), random_mv(m, rnd)
        assert clifford_conjugate(a * b) == clifford_conjugate(b) * clifford_conjugate(a)
        assert hermitian_bar(a * b) == hermitian_bar(b) * hermitian_bar(a)

    @given(st.integers(0, 10**6), st.integers(1, 5))
    def test_hermitian_norm_positive(self, seed, m):
        a = random_mv(m, random.Random(seed))
        if a:
            assert scalar_part(hermitian_bar(a) * a).is_positive()


class TestGradesAndPseudoscalar:
    def test_scalar_part(self):
        assert scalar_part(one(3) * 3 + e(3, 1, 2) * 2) == Scalar(3)
        assert scalar_part(e(3, 1)) == Scalar(0)
        a = -e(2, 1) + e(2, 2) * I
        b = e(2, 1) + e(2, 2) * I
        assert scalar_part(a * b) == Scalar(2)

    def test_grade_projection(self):
        a = one(3) + e(3, 1) + e(3, 1, 2)
        assert grade_projection(a, 1) == e(3, 1)
        assert not grade_projection(e(3, 1, 2), 0)
        wp_e3 = (e(3, 1) + e(3, 2) * I) * e(3, 3)
        assert grade_projection(wp_e3, 2) == wp_e3
        assert sum((grade_projection(a, s) for s in range(4)), Multivector(3)) == a
        with pytest.raises(ValueError):
            grade_projection(a, 4)

    def test_pseudoscalar(self):
        assert pseudoscalar(3) == e(3, 1, 2, 3)
        assert right_mul_eM(e(3, 1)) == -e(3, 2, 3)
        assert right_mul_eM(one(3)) == pseudoscalar(3)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_pseudoscalar_square(self, m):
        eM = pseudoscalar(m)
        assert eM * eM == one(m) * (-1) ** (m * (m + 1) // 2)

    def test_json_round_trip(self):
        a = e(3, 1, 3) * Scalar("1/2", -3) + one(3)
        data = a.to_json()
        assert data["dim"] == 3
        assert Multivector.from_json(data) == a
