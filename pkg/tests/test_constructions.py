import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from socles.constructions import (
    ParameterTriple,
    admissible_params,
    allk_ideal,
    example_a,
    example_b,
    hh_depth,
    intersection_chain_check,
    random_complex,
    random_monomial_ideal,
    random_single_degree_ideal,
    random_squarefree_ideal,
    squarefree_veronese,
    threshold,
)
from socles.criteria import condition_a, condition_b, facets_of
from socles.ideal import Monomial, power
from socles.socle import depth_zero_profile, socle_monomials


def supports(I):
    return {tuple(sorted(g.support)) for g in I.generators}


class TestExampleA:
    def test_n4(self):
        assert supports(example_a(4)) == {(1, 2, 3), (1, 4), (2, 4), (3, 4)}

    def test_n4_socle(self):
        assert Monomial.full(4) in socle_monomials(power(example_a(4), 2)).socle_monomials

    def test_n3_is_triangle(self):
        assert example_a(3) == squarefree_veronese(3, 2)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            example_a(2)


class TestExampleB:
    def test_d3(self):
        I = example_b(3)
        assert I.n == 5
        assert supports(I) == {(1, 2, 3), (1, 4, 5), (2, 4, 5), (3, 4, 5), (2, 3, 4), (2, 3, 5)}

    def test_d3_conditions(self):
        D = facets_of(example_b(3))
        assert condition_a(D, 2)[0] and condition_b(D, 2)[0]
        assert Monomial.full(5) in socle_monomials(power(example_b(3), 2)).socle_monomials

    def test_d2_is_triangle(self):
        assert example_b(2) == squarefree_veronese(3, 2)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_generator_count_and_degree(self, d):
        I = example_b(d)
        # d = 2 collapses duplicates into the triangle
        assert len(I) == (3 if d == 2 else 1 + d + (d - 1))
        assert I.is_single_degree() and I.generators[0].degree == d

    def test_rejects_small_d(self):
        with pytest.raises(ValueError):
            example_b(1)


class TestVeronese:
    def test_examples(self):
        assert supports(squarefree_veronese(3, 2)) == {(1, 2), (1, 3), (2, 3)}
        assert supports(squarefree_veronese(4, 3)) == {(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)}
        assert len(squarefree_veronese(5, 3)) == 10

    @pytest.mark.parametrize("n,d", [(3, 0), (3, 4)])
    def test_range(self, n, d):
        with pytest.raises(ValueError):
            squarefree_veronese(n, d)


class TestFormulas:
    @pytest.mark.parametrize(
        "n,d,k,expected", [(3, 2, 2, 0), (4, 3, 3, 0), (4, 3, 2, 1), (5, 3, 2, 0)]
    )
    def test_hh_depth(self, n, d, k, expected):
        assert hh_depth(n, d, k) == expected

    def test_threshold(self):
        assert threshold(5, 2) == 3
        assert threshold(4, 3) == 3
        t = threshold(4, 2)
        assert t == Fraction(5, 2) and isinstance(t, Fraction)
        assert 3 > t and not 2 > t

    @pytest.mark.parametrize(
        "k,r,n,d", [(2, 1, 5, 3), (2, 0, 3, 2), (3, 0, 4, 3)]
    )
    def test_admissible(self, k, r, n, d):
        assert admissible_params(k, r) == ParameterTriple(n=n, d=d, k=k)

    @given(st.integers(2, 30), st.integers(0, 30))
    def test_admissible_identity(self, k, r):
        p = admissible_params(k, r)
        assert k * p.d == (k - 1) * p.n + 1
        assert threshold(p.n, k) == p.d
        assert hh_depth(p.n, p.d, k) == 0

    def test_admissible_range(self):
        with pytest.raises(ValueError):
            admissible_params(1, 0)
        with pytest.raises(ValueError):
            admissible_params(2, -1)

    def test_parameter_triple_validation(self):
        with pytest.raises(ValueError):
            ParameterTriple(n=3, d=4, k=1)


class TestAllk:
    def test_k2_is_triangle(self):
        assert allk_ideal(2) == squarefree_veronese(3, 2)

    def test_k3_profile(self):
        assert depth_zero_profile(allk_ideal(3), 4) == (False, False, True, True)

    def test_k3_conditions(self):
        D = facets_of(allk_ideal(3))
        assert condition_a(D, 3)[0] and condition_b(D, 3)[0]
        assert set.intersection({1, 2, 3}, {1, 2, 4}, {1, 3, 4}) == {1}


class TestChain:
    def test_examples(self):
        assert intersection_chain_check([(1, 2, 3), (2, 3, 4)], 2, 4)
        assert intersection_chain_check([(1, 2)], 1, 3)
        assert intersection_chain_check([(1, 2, 3, 4), (2, 3, 4, 5)], 2, 5)

    def test_precondition(self):
        with pytest.raises(ValueError):
            intersection_chain_check([(1, 2), (3, 4)], 2, 4)  # d = 2 < 5/2
        with pytest.raises(ValueError):
            intersection_chain_check([(1, 2, 3)], 2, 4)
        with pytest.raises(ValueError):
            intersection_chain_check([(1, 2, 3), (2, 3)], 2, 4)

    @settings(max_examples=200)
    @given(st.data())
    def test_always_holds(self, data):
        n = data.draw(st.integers(2, 9))
        k = data.draw(st.integers(1, 4))
        t = threshold(n, k)
        d = data.draw(st.sampled_from([d for d in range(1, n + 1) if d > t]))
        sets = [
            data.draw(st.lists(st.integers(1, n), min_size=d, max_size=d, unique=True))
            for _ in range(k)
        ]
        assert intersection_chain_check(sets, k, n)


class TestRandom:
    def test_seeded_reproducible(self):
        a = [random_squarefree_ideal(random.Random(7), 5) for _ in range(3)]
        b = [random_squarefree_ideal(random.Random(7), 5) for _ in range(3)]
        assert a == b

    def test_shapes(self):
        rng = random.Random(1)
        for _ in range(50):
            assert random_squarefree_ideal(rng, 4).is_squarefree()
            J = random_monomial_ideal(rng, 3, max_exp=3)
            assert not J.is_zero() and J.is_proper()
            assert max(max(g) for g in J.generators) <= 3
            I = random_single_degree_ideal(rng, 5, 3, 4)
            assert I.is_single_degree() and len(I) == 4
            D = random_complex(rng, 4)
            assert D.n == 4 and D.facets

    def test_single_degree_caps_count(self):
        I = random_single_degree_ideal(random.Random(0), 4, 3, 99)
        assert len(I) == comb(4, 3)
