import random
from itertools import product as cartesian

import pytest
from hypothesis import given, settings, strategies as st

from conftest import TRIANGLE, TRIANGLE_SQUARE, bf_member, bf_power_member, ideals, monomials
from socles.ideal import (
    MAX_EXPONENT,
    Monomial,
    MonomialIdeal,
    ParseError,
    colon_by_maximal,
    colon_by_variable,
    contains,
    divides,
    intersect,
    max_degrees,
    minimalize,
    parse,
    power,
    product,
    serialize,
)


def M(*e):
    return Monomial(e)


def I(n, *gens):
    return MonomialIdeal.from_generators(n, gens)


class TestMonomial:
    def test_divides(self):
        assert divides(M(1, 1, 0), M(2, 1, 1))
        assert divides(M(0, 0, 0), M(5, 0, 2))
        assert not divides(M(2, 0), M(1, 3))

    def test_divides_mismatched_n(self):
        with pytest.raises(ValueError):
            divides(M(1, 0), M(1, 0, 0))

    @pytest.mark.parametrize("bad", [(-1, 0), (1.5, 0), (True, 1), ()])
    def test_rejects_bad_exponents(self, bad):
        with pytest.raises((ValueError, TypeError)):
            Monomial(bad)

    def test_overflow_is_reported(self):
        big = M(MAX_EXPONENT, 0)
        with pytest.raises(OverflowError):
            big.times(M(1, 0))
        with pytest.raises(OverflowError):
            big.times_variable(1)
        with pytest.raises(OverflowError):
            power(MonomialIdeal(2, (big,)), 2)

    def test_helpers(self):
        assert Monomial.full(3, 2) == (2, 2, 2)
        assert Monomial.from_support(4, {1, 4}) == (1, 0, 0, 1)
        assert Monomial.variable(3, 2) == (0, 1, 0)
        assert M(1, 0, 2).support == {1, 3}
        assert str(M(1, 0, 2)) == "x1*x3^2"
        assert str(Monomial.unit(2)) == "1"
        with pytest.raises(IndexError):
            Monomial.variable(3, 4)


class TestMinimalize:
    def test_divisor_absorbs_multiple(self):
        assert minimalize([M(1, 1, 0), M(2, 1, 0)]).generators == (M(1, 1, 0),)

    def test_antichain_unchanged(self):
        J = minimalize([M(1, 1, 0), M(1, 0, 1), M(0, 1, 1)])
        assert set(J.generators) == set(TRIANGLE)

    def test_triangle_square_products_are_minimal(self):
        # all six pairwise products, already an antichain
        prods = {tuple(a + b for a, b in zip(u, v)) for u in TRIANGLE for v in TRIANGLE}
        assert prods == TRIANGLE_SQUARE
        assert set(minimalize(prods).generators) == TRIANGLE_SQUARE

    def test_empty_is_zero_ideal(self):
        J = minimalize([], n=3)
        assert J.is_zero() and J.n == 3
        with pytest.raises(ValueError):
            minimalize([])

    def test_output_is_lex_sorted(self):
        J = minimalize([M(0, 1, 1), M(1, 1, 0), M(1, 0, 1)])
        assert list(J.generators) == sorted(J.generators)

    @given(st.lists(monomials(3).filter(any), min_size=1, max_size=8), st.randoms())
    def test_idempotent_and_order_independent(self, gens, rnd):
        J = minimalize(gens)
        shuffled = list(gens)
        rnd.shuffle(shuffled)
        assert minimalize(shuffled) == J
        assert minimalize(J.generators) == J

    @given(st.lists(monomials(3).filter(any), min_size=1, max_size=8), monomials(3, 4))
    def test_membership_unchanged(self, gens, u):
        assert contains(minimalize(gens), u) == bf_member(gens, u)

    @given(ideals())
    def test_no_generator_divides_another(self, J):
        for a in J.generators:
            for b in J.generators:
                if a != b:
                    assert not a.divides(b)


class TestContains:
    def test_triangle(self, triangle):
        assert contains(triangle, M(1, 1, 1))

    def test_triangle_square(self, triangle):
        sq = power(triangle, 2)
        assert not contains(sq, M(1, 1, 1))
        assert contains(sq, M(2, 1, 1))

    def test_mismatched_n(self, triangle):
        with pytest.raises(ValueError):
            contains(triangle, M(1, 1))


class TestProductPower:
    def test_triangle_square(self, triangle):
        assert set(power(triangle, 2).generators) == TRIANGLE_SQUARE

    def test_first_power_is_identity(self, triangle):
        assert power(triangle, 1) == triangle

    def test_principal_product(self):
        assert product(I(2, (1, 0)), I(2, (0, 1))) == I(2, (1, 1))

    def test_zero_power_rejected(self, triangle):
        with pytest.raises(ValueError):
            power(triangle, 0)

    @settings(max_examples=60, deadline=None)
    @given(ideals(n=3, max_exp=2, max_gens=4), st.integers(1, 2), st.integers(1, 2))
    def test_power_additive(self, J, a, b):
        assert power(J, a + b) == product(power(J, a), power(J, b))

    @settings(max_examples=60, deadline=None)
    @given(ideals(n=3, max_exp=2, max_gens=4), st.integers(1, 3), st.data())
    def test_power_membership_matches_brute_force(self, J, k, data):
        u = data.draw(monomials(3, 2 * k + 1))
        assert contains(power(J, k), u) == bf_power_member(J.generators, k, u)

    @settings(max_examples=60, deadline=None)
    @given(ideals(max_gens=4, squarefree=True), st.integers(1, 4))
    def test_squarefree_power_degrees_bounded_by_k(self, J, k):
        assert all(c <= k for c in max_degrees(power(J, k)))


class TestColon:
    def test_strip_variable(self):
        assert colon_by_variable(I(3, (1, 1, 0), (0, 1, 1)), 2) == I(3, (1, 0, 0), (0, 0, 1))

    def test_absent_variable(self):
        assert colon_by_variable(I(2, (2, 0)), 2) == I(2, (2, 0))

    def test_triangle_square_colon_x1(self, triangle):
        assert contains(colon_by_variable(power(triangle, 2), 1), M(1, 1, 1))

    def test_index_out_of_range(self, triangle):
        with pytest.raises(IndexError):
            colon_by_variable(triangle, 4)
        with pytest.raises(IndexError):
            colon_by_variable(triangle, 0)

    def test_colon_maximal_triangle_square(self, triangle):
        sq = power(triangle, 2)
        Jm = colon_by_maximal(sq)
        assert contains(Jm, M(1, 1, 1)) and not contains(sq, M(1, 1, 1))

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_colon_maximal_of_m_contains_unit(self, n):
        Jm = colon_by_maximal(MonomialIdeal.maximal(n))
        assert contains(Jm, Monomial.unit(n))
        assert Jm.is_unit()

    def test_colon_maximal_zero_ideal_rejected(self):
        with pytest.raises(ValueError):
            colon_by_maximal(MonomialIdeal.zero(2))

    @settings(max_examples=80, deadline=None)
    @given(ideals(n=3, max_exp=3))
    def test_colon_maximal_box(self, J):
        Jm = colon_by_maximal(J)
        for g in J.generators:
            assert contains(Jm, g)
        for u in cartesian(range(5), repeat=3):
            expected = all(
                bf_member(J.generators, tuple(a + (j == i) for j, a in enumerate(u)))
                for i in range(3)
            )
            assert contains(Jm, u) == expected


class TestIntersect:
    def test_principal(self):
        assert intersect(I(2, (1, 0)), I(2, (0, 1))) == I(2, (1, 1))

    def test_idempotent(self, triangle):
        assert intersect(triangle, triangle) == triangle

    def test_lcm(self):
        assert intersect(I(3, (1, 1, 0)), I(3, (0, 1, 1))) == I(3, (1, 1, 1))

    def test_mismatched_n(self):
        with pytest.raises(ValueError):
            intersect(I(2, (1, 0)), I(3, (1, 0, 0)))

    @settings(max_examples=80, deadline=None)
    @given(ideals(n=3), ideals(n=3))
    def test_membership_box(self, A, B):
        C = intersect(A, B)
        for u in cartesian(range(5), repeat=3):
            assert contains(C, u) == (bf_member(A.generators, u) and bf_member(B.generators, u))


class TestMaxDegrees:
    def test_examples(self, triangle):
        assert max_degrees(triangle) == (1, 1, 1)
        assert max_degrees(power(triangle, 2)) == (2, 2, 2)
        assert max_degrees(I(2, (3, 1), (0, 2))) == (3, 2)

    def test_zero_ideal_rejected(self):
        with pytest.raises(ValueError):
            max_degrees(MonomialIdeal.zero(2))


class TestSerialization:
    def test_round_trip(self, triangle):
        text = serialize(triangle)
        assert parse(text) == triangle
        assert serialize(parse(text)) == text

    @given(ideals())
    def test_round_trip_property(self, J):
        assert parse(serialize(J)) == J

    def test_generators_are_lex_ordered(self):
        text = serialize(I(3, (0, 1, 1), (1, 0, 1), (1, 1, 0)))
        assert '"generators": [[0, 1, 1], [1, 0, 1], [1, 1, 0]]' in text

    def test_parse_minimalizes(self):
        assert parse('{"n": 2, "generators": [[1, 0], [2, 1]]}') == I(2, (1, 0))

    @pytest.mark.parametrize(
        "text",
        [
            "{not json",
            "[1, 2]",
            '{"n": 2}',
            '{"n": 0, "generators": []}',
            '{"n": 2, "generators": [[1, 0, 0]]}',
            '{"n": 2, "generators": [[1, -1]]}',
            '{"n": 2, "generators": [[1, "a"]]}',
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_parse_error_has_line_number(self):
        with pytest.raises(ParseError) as exc:
            parse('{"n": 2,\n "generators": [[1, 0],\n oops]}')
        assert exc.value.lineno == 3


def test_values_are_hashable_and_immutable(triangle):
    assert {triangle: 1}[power(triangle, 1)] == 1
    with pytest.raises(Exception):
        triangle.n = 4


def test_random_ideals_shared_across_threads(triangle):
    from concurrent.futures import ThreadPoolExecutor

    rng = random.Random(3)
    us = [tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(200)]
    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(lambda u: contains(power(triangle, 2), u), us))
    assert got == [bf_power_member(TRIANGLE, 2, u) for u in us]
