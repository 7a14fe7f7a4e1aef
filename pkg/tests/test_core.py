import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgfact import (
    ConstructionError,
    DimensionMismatchError,
    affine_semigroup,
    contains,
    delta_of_element,
    dist,
    factorizations,
    length_set,
)

from oracles import brute_factorizations


class TestConstruction:
    def test_already_minimal(self):
        s = affine_semigroup([3, 4, 5])
        assert s.generators == ((3,), (4,), (5,))
        assert s.dim == 1

    def test_redundant_generator_dropped(self):
        # 7 = 3 + 4, so it is not an atom
        s = affine_semigroup([3, 4, 5, 7])
        assert s.generators == ((3,), (4,), (5,))

    def test_free_monoid(self):
        s = affine_semigroup([(1, 0), (0, 1)])
        assert s.generators == ((0, 1), (1, 0))

    def test_cascading_reduction(self):
        s = affine_semigroup([2, 4, 6])
        assert s.generators == ((2,),)

    def test_duplicates_collapse(self):
        s = affine_semigroup([5, 5, 7])
        assert s.generators == ((5,), (7,))

    @pytest.mark.parametrize(
        "gens", [[], [0], [(0, 0), (1, 0)], [(1, 0), (0, 1, 1)], [(-1, 2)]]
    )
    def test_rejects_bad_input(self, gens):
        with pytest.raises(ConstructionError):
            affine_semigroup(gens)

    def test_matrix_is_columnwise(self):
        s = affine_semigroup([(1, 2), (3, 4)])
        assert s.matrix == ((1, 3), (2, 4))


class TestMembership:
    def test_zero_always_contained(self):
        assert contains(affine_semigroup([3, 4, 5]), 0)

    def test_member(self):
        assert contains(affine_semigroup([3, 4, 5]), 8)

    def test_non_member(self):
        assert not contains(affine_semigroup([3, 4, 5]), 2)

    def test_negative_coordinates(self):
        assert not contains(affine_semigroup([(1, 0), (0, 1)]), (-1, 0))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            contains(affine_semigroup([3, 4, 5]), (1, 2))


class TestFactorizations:
    def test_fiber_of_eight(self):
        assert factorizations(affine_semigroup([3, 4, 5]), 8) == ((0, 2, 0), (1, 0, 1))

    def test_zero_has_empty_factorization(self):
        assert factorizations(affine_semigroup([3, 4, 5]), 0) == ((0, 0, 0),)

    def test_non_member_yields_empty(self):
        assert factorizations(affine_semigroup([3, 4, 5]), 2) == ()

    def test_known_pair_in_large_fiber(self):
        s = affine_semigroup([11, 36, 39])
        fiber = factorizations(s, 450)
        assert (6, 2, 8) in fiber and (24, 3, 2) in fiber
        assert fiber == tuple(brute_factorizations(s.generators, 450))

    def test_affine_fiber(self):
        s = affine_semigroup([(1, 0), (1, 1), (0, 2)])
        fiber = factorizations(s, (2, 2))
        assert fiber == tuple(brute_factorizations(s.generators, (2, 2)))
        for z in fiber:
            total = tuple(
                sum(c * g[i] for c, g in zip(z, s.generators)) for i in range(2)
            )
            assert total == (2, 2)

    def test_agrees_with_brute_force_on_random_semigroups(self):
        import random

        rng = random.Random(1234)
        for _ in range(20):
            k = rng.randint(2, 5)
            gens = [tuple([rng.randint(2, 50)]) for _ in range(k)]
            s = affine_semigroup(gens)
            gamma = rng.randint(0, 120)
            assert factorizations(s, gamma) == tuple(
                brute_factorizations(s.generators, gamma)
            )


class TestLengthsAndDeltas:
    def test_length_set_of_eight(self):
        assert length_set(affine_semigroup([3, 4, 5]), 8) == (2,)

    def test_length_set_of_zero(self):
        assert length_set(affine_semigroup([3, 4, 5]), 0) == (0,)

    def test_delta_of_eight_is_empty(self):
        assert delta_of_element(affine_semigroup([3, 4, 5]), 8) == ()

    def test_delta_of_nine_and_ten(self):
        s = affine_semigroup([3, 4, 5])
        assert delta_of_element(s, 9) == (1,)
        assert delta_of_element(s, 10) == (1,)

    def test_length_gap_of_six_appears_at_266(self):
        s = affine_semigroup([17, 33, 53, 71])
        lengths = length_set(s, 266)
        gaps = {b - a for a, b in zip(lengths, lengths[1:])}
        assert 6 in gaps
        assert 6 in delta_of_element(s, 283)
        assert 6 in delta_of_element(s, 300)


class TestDistance:
    def test_distance_to_self_is_zero(self):
        assert dist((3, 1, 2), (3, 1, 2)) == 0

    def test_known_weight(self):
        assert dist((9, 7, 0), (0, 0, 9)) == 16

    def test_disjoint_supports(self):
        assert dist((1, 0, 1), (0, 2, 0)) == 2

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            dist((1, 2), (1, 2, 3))

    @given(
        st.lists(st.tuples(*[st.integers(0, 9)] * 4), min_size=3, max_size=3),
    )
    @settings(max_examples=200, deadline=None)
    def test_metric_axioms(self, triple):
        z, w, u = triple
        assert dist(z, w) == dist(w, z)
        assert (dist(z, w) == 0) == (z == w)
        assert dist(z, w) <= dist(z, u) + dist(u, w)

    @given(
        st.tuples(*[st.integers(0, 9)] * 4),
        st.tuples(*[st.integers(0, 9)] * 4),
        st.tuples(*[st.integers(0, 9)] * 4),
    )
    @settings(max_examples=200, deadline=None)
    def test_translation_invariance(self, z, w, shift):
        shifted_z = tuple(a + b for a, b in zip(z, shift))
        shifted_w = tuple(a + b for a, b in zip(w, shift))
        assert dist(shifted_z, shifted_w) == dist(z, w)
