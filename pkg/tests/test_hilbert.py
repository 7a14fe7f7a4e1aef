import random

import pytest

from sgfact import (
    ConstructionError,
    Relation,
    ResourceLimitError,
    affine_semigroup,
    diophantine_system,
    graver_basis,
    hilbert_basis,
    integer_kernel_basis,
    minimal_solutions,
    primitive_kernel_vectors,
)

from oracles import brute_solutions, decomposes_over, minimal_elements

# the paper's example list for <3,4,5> omits the pure 4/5 relation
# ((0,5,0),(0,0,4)), which is primitive (verified by brute force below)
GRAVER_345 = {
    ((1, 0, 1), (0, 2, 0)),
    ((1, 3, 0), (0, 0, 3)),
    ((2, 1, 0), (0, 0, 2)),
    ((3, 0, 0), (0, 1, 1)),
    ((4, 0, 0), (0, 3, 0)),
    ((5, 0, 0), (0, 0, 3)),
    ((0, 5, 0), (0, 0, 4)),
}


class TestKernelBasis:
    def test_rank_one(self):
        basis = integer_kernel_basis([(2, 3)])
        assert len(basis) == 1
        v = basis[0]
        assert 2 * v[0] + 3 * v[1] == 0 and any(v)

    def test_full_rank_kernel_is_trivial(self):
        assert integer_kernel_basis([(1, 0), (0, 1)]) == []

    def test_spans_kernel_lattice(self):
        # (1,-2,1) is in the kernel and must be an integer combination
        basis = integer_kernel_basis([(3, 4, 5)])
        assert len(basis) == 2
        from itertools import product

        target = (1, -2, 1)
        hits = [
            (a, b)
            for a, b in product(range(-6, 7), repeat=2)
            if tuple(a * x + b * y for x, y in zip(*basis)) == target
        ]
        assert hits


class TestHilbertBasis:
    def test_only_zero_solution(self):
        assert hilbert_basis(diophantine_system([(1,)])) == ()

    def test_forced_diagonal(self):
        assert hilbert_basis(diophantine_system([(1, -1)])) == ((1, 1),)

    def test_doubled_system_contains_graver_pairs(self):
        basis = hilbert_basis(diophantine_system([(3, 4, 5, -3, -4, -5)]))
        diagonals = {v for v in basis if v[:3] == v[3:]}
        assert diagonals == {
            (1, 0, 0, 1, 0, 0),
            (0, 1, 0, 0, 1, 0),
            (0, 0, 1, 0, 0, 1),
        }
        pairs = set()
        for v in basis:
            z, w = v[:3], v[3:]
            if all(a == 0 or b == 0 for a, b in zip(z, w)) and z != w:
                pairs.add((z, w) if z > w else (w, z))
        assert pairs == GRAVER_345
        assert len(basis) == 3 + 2 * len(GRAVER_345)

    def test_congruence_rows(self):
        # x1 + 2 x2 = 0 mod 3
        basis = hilbert_basis(diophantine_system([(1, 2)], moduli=[3]))
        assert basis == ((0, 3), (1, 1), (3, 0))

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ConstructionError):
            hilbert_basis(diophantine_system([(1, 2)], rhs=[3]))

    def test_rejects_homogeneous_geq(self):
        with pytest.raises(ConstructionError):
            hilbert_basis(diophantine_system([(1, -1)], Relation.GEQ))

    def test_budget_aborts(self):
        with pytest.raises(ResourceLimitError):
            hilbert_basis(diophantine_system([(17, 33, -53, -71)]), max_steps=3)


class TestMinimalSolutions:
    def test_geq_paper_example(self):
        sols = minimal_solutions(diophantine_system([(3, 5, 7)], Relation.GEQ, rhs=[3]))
        assert sols == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_shifted_fiber_via_doubled_system(self):
        # minimal factorizations of 3 + <3,5,7>: doubled equality system with
        # rhs 3, project to the first block, re-minimalize
        sols = minimal_solutions(
            diophantine_system([(3, 5, 7, -3, -5, -7)], rhs=[3])
        )
        projected = minimal_elements(v[:3] for v in sols if any(v[:3]))
        assert projected == [(0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 0)]

    def test_geq_trivial(self):
        assert minimal_solutions(diophantine_system([(1,)], Relation.GEQ, rhs=[1])) == ((1,),)

    def test_infeasible_returns_empty(self):
        assert minimal_solutions(diophantine_system([(2,)], rhs=[3])) == ()

    def test_rejects_homogeneous(self):
        with pytest.raises(ConstructionError):
            minimal_solutions(diophantine_system([(1, 2)]))

    def test_rejects_negative_geq_matrix(self):
        with pytest.raises(ConstructionError):
            minimal_solutions(diophantine_system([(1, -1)], Relation.GEQ, rhs=[1]))


class TestGraverBasis:
    def test_three_four_five(self):
        assert set(graver_basis(affine_semigroup([3, 4, 5]))) == GRAVER_345

    def test_free_monoid_is_trivial(self):
        assert graver_basis(affine_semigroup([(1, 0), (0, 1)])) == ()

    def test_two_three(self):
        assert graver_basis(affine_semigroup([2, 3])) == (((3, 0), (0, 2)),)

    def test_pairs_are_kernel_pairs_with_disjoint_support(self):
        s = affine_semigroup([11, 36, 39])
        for z, w in graver_basis(s):
            assert sum(c * a[0] for c, a in zip(z, s.generators)) == sum(
                c * a[0] for c, a in zip(w, s.generators)
            )
            assert all(a == 0 or b == 0 for a, b in zip(z, w))
            assert z > w


def _check_system(matrix, moduli=None):
    basis = hilbert_basis(diophantine_system(matrix, moduli=moduli))
    for v in basis:
        for i, row in enumerate(matrix):
            value = sum(a * b for a, b in zip(row, v))
            if moduli and moduli[i]:
                assert value % moduli[i] == 0
            else:
                assert value == 0
    # pairwise incomparable
    for v in basis:
        for w in basis:
            if v != w:
                assert not all(a <= b for a, b in zip(v, w))
    bound = max((max(v) for v in basis), default=2) + 1
    solutions = brute_solutions(matrix, bound, moduli=moduli)
    assert minimal_elements(solutions) == sorted(basis)
    # every boxed solution decomposes over the basis
    for x in solutions[:60]:
        assert decomposes_over(x, basis)


class TestAgainstBruteForce:
    def test_random_equality_systems(self):
        rng = random.Random(20250810)
        done = 0
        while done < 12:
            n = rng.randint(2, 5)
            rows = rng.randint(1, 2)
            matrix = [
                tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(rows)
            ]
            if all(all(c >= 0 for c in row) for row in matrix):
                continue  # nonnegative rows force the trivial monoid
            _check_system(matrix)
            done += 1

    def test_random_congruence_systems(self):
        rng = random.Random(99)
        for _ in range(6):
            n = rng.randint(2, 4)
            matrix = [tuple(rng.randint(0, 5) for _ in range(n))]
            _check_system(matrix, moduli=[rng.choice([2, 3, 4])])

    def test_completion_matches_frontier_engine(self):
        rng = random.Random(7)
        for _ in range(15):
            n = rng.randint(2, 5)
            matrix = [tuple(rng.randint(-6, 6) for _ in range(n))]
            frontier = set(hilbert_basis(diophantine_system(matrix)))
            completion = set()
            for v in primitive_kernel_vectors(matrix):
                if all(c >= 0 for c in v):
                    completion.add(v)
                elif all(c <= 0 for c in v):
                    completion.add(tuple(-c for c in v))
            assert frontier == completion
