"""Minimal presentations, Betti elements, and delta-set bounds.

A minimal presentation is assembled fiber by fiber: candidate values come
from a binomial generating set of the defining ideal, and at each candidate
the factorization fiber is split into components of the shared-support graph;
a fiber with c >= 2 components contributes c - 1 star relations.
"""

from __future__ import annotations

from math import gcd

from .core import AffineSemigroup, Vector, delta_of_element, factorizations
from .hilbert import integer_kernel_basis, primitive_kernel_vectors
from .grobner import toric_ideal

Relation = tuple[Vector, Vector]

# kernel lattices up to this dimension use the primitive-vector completion for
# Betti candidates; wider kernels go through the elimination-based ideal, whose
# cost does not grow with the kernel dimension
_KERNEL_DIM_CUTOFF = 6


def _value_of(S: AffineSemigroup, z: Vector) -> Vector:
    out = [0] * S.dim
    for count, atom in zip(z, S.generators):
        if count:
            for i, c in enumerate(atom):
                out[i] += count * c
    return tuple(out)


def _betti_candidates(S: AffineSemigroup, *, max_steps: int | None = None) -> list[Vector]:
    kernel_dim = len(integer_kernel_basis(S.matrix))
    if kernel_dim == 0:
        return []
    if kernel_dim <= _KERNEL_DIM_CUTOFF:
        vectors = primitive_kernel_vectors(S.matrix, max_steps=max_steps)
        values = {_value_of(S, tuple(c if c > 0 else 0 for c in v)) for v in vectors}
    else:
        ideal = toric_ideal(S, max_steps=max_steps)
        values = {_value_of(S, b.plus) for b in ideal.binomials}
    return sorted(values)


def _support_components(fiber: tuple[Vector, ...]) -> list[list[Vector]]:
    """Partition a fiber by the graph joining factorizations with overlapping support."""
    parent = list(range(len(fiber)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    k = len(fiber[0]) if fiber else 0
    for coord in range(k):
        first = None
        for idx, z in enumerate(fiber):
            if z[coord]:
                if first is None:
                    first = idx
                else:
                    parent[find(idx)] = find(first)
    groups: dict[int, list[Vector]] = {}
    for idx, z in enumerate(fiber):
        groups.setdefault(find(idx), []).append(z)
    return sorted(groups.values(), key=lambda g: min(g))


def minimal_presentation(
    S: AffineSemigroup, *, max_steps: int | None = None
) -> tuple[Relation, ...]:
    """An irredundant generating set of the kernel congruence of the semigroup.

    Presentations are not unique; this one is canonical: at every Betti value
    the relations form a star from the lexicographically least factorization
    to the least member of each other support component.  Pairs are oriented
    larger-side-first and sorted.
    """
    relations: list[Relation] = []
    for value in _betti_candidates(S, max_steps=max_steps):
        fiber = factorizations(S, value)
        if len(fiber) <= 1:
            continue
        components = _support_components(fiber)
        if len(components) <= 1:
            continue
        center = components[0][0]  # lex-least member of the whole fiber
        for comp in components[1:]:
            rep = min(comp)
            relations.append((rep, center) if rep > center else (center, rep))
    return tuple(sorted(relations))


def betti_elements(S: AffineSemigroup, *, max_steps: int | None = None) -> tuple[Vector, ...]:
    """Values of the relations in a minimal presentation (independent of the choice)."""
    return tuple(sorted({_value_of(S, z) for z, _ in minimal_presentation(S, max_steps=max_steps)}))


def delta_bounds(
    S: AffineSemigroup, *, max_steps: int | None = None
) -> tuple[int, int] | None:
    """(min, max) of the semigroup's delta set, or None when that set is empty.

    The minimum is the gcd of the relation length gaps; the maximum is the
    largest element-level delta over the Betti values.  Betti values whose own
    delta set is empty are skipped in the maximum; zero length gaps are
    ignored in the gcd unless all gaps vanish (half-factorial case).
    """
    relations = minimal_presentation(S, max_steps=max_steps)
    gaps = [abs(sum(z) - sum(w)) for z, w in relations]
    nonzero = [g for g in gaps if g]
    if not nonzero:
        return None
    lower = 0
    for g in nonzero:
        lower = gcd(lower, g)
    upper = 0
    for value in {_value_of(S, z) for z, _ in relations}:
        deltas = delta_of_element(S, value)
        if deltas:
            upper = max(upper, deltas[-1])
    return (lower, upper)
