"""Groebner bases for pure-difference binomial ideals.

Every object in scope is a difference of two monomials with coefficients 1
and -1, so a polynomial is just an ordered pair of exponent vectors and the
whole Buchberger loop closes over that representation: S-pairs and remainders
of binomials are again binomials (or zero).

Binomials are NOT normalized by cancelling a common monomial factor.  That
cancellation is only sound for saturated (toric) ideals; the ascending-chain
ideals used by the delta-set computation are generated by kernel binomials
but are not toric, and cancelling there can silently enlarge them.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .core import AffineSemigroup, Vector, vadd, vsub
from .errors import ConstructionError, ResourceLimitError


class OrderKind(Enum):
    LEX = "lex"
    GRLEX = "grlex"
    BLOCK_ELIM = "block_elim"


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on exponent vectors of a fixed number of variables.

    ``priority`` lists variable indices from most to least significant.  For
    BLOCK_ELIM the eliminated block is most significant (any monomial using a
    block variable beats any monomial that does not), with lex ties inside
    each block.
    """

    kind: OrderKind
    nvars: int
    priority: tuple[int, ...]
    elim: tuple[int, ...] = ()

    @staticmethod
    def lex(nvars: int, priority: Sequence[int] | None = None) -> "TermOrder":
        prio = tuple(priority) if priority is not None else tuple(range(nvars))
        if sorted(prio) != list(range(nvars)):
            raise ConstructionError("priority must be a permutation of the variables")
        return TermOrder(OrderKind.LEX, nvars, prio)

    @staticmethod
    def grlex(nvars: int, priority: Sequence[int] | None = None) -> "TermOrder":
        prio = tuple(priority) if priority is not None else tuple(range(nvars))
        if sorted(prio) != list(range(nvars)):
            raise ConstructionError("priority must be a permutation of the variables")
        return TermOrder(OrderKind.GRLEX, nvars, prio)

    @staticmethod
    def block_elim(nvars: int, elim: Sequence[int]) -> "TermOrder":
        block = tuple(sorted(elim))
        if any(i < 0 or i >= nvars for i in block) or len(set(block)) != len(block):
            raise ConstructionError("eliminated block must be a set of variable indices")
        rest = tuple(i for i in range(nvars) if i not in set(block))
        return TermOrder(OrderKind.BLOCK_ELIM, nvars, block + rest, block)

    def key(self, exponent: Vector):
        if self.kind is OrderKind.GRLEX:
            return (sum(exponent), tuple(exponent[i] for i in self.priority))
        if self.kind is OrderKind.BLOCK_ELIM:
            # graded comparison inside each block: still an elimination order
            # (block degree dominates), but without the lex degree blowup
            block = tuple(exponent[i] for i in self.elim)
            rest = tuple(exponent[i] for i in self.priority[len(self.elim):])
            return (sum(block), block, sum(rest), rest)
        return tuple(exponent[i] for i in self.priority)

    def greater(self, a: Vector, b: Vector) -> bool:
        return self.key(a) > self.key(b)


class Binomial:
    """y^plus - y^minus with plus strictly greater under the ambient order.

    The degenerate difference y^z - y^z is the shared ZERO value; test with
    ``b.is_zero``.
    """

    __slots__ = ("plus", "minus", "is_zero")

    def __init__(self, plus: Vector, minus: Vector, *, _zero: bool = False):
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)
        object.__setattr__(self, "is_zero", _zero)

    def __setattr__(self, *args):  # immutable
        raise AttributeError("Binomial is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Binomial)
            and self.is_zero == other.is_zero
            and (self.is_zero or (self.plus == other.plus and self.minus == other.minus))
        )

    def __hash__(self):
        return hash((self.is_zero, self.plus, self.minus))

    def __repr__(self):  # pragma: no cover - cosmetic
        if self.is_zero:
            return "Binomial.ZERO"

        def mono(e):
            parts = [f"y{i+1}^{c}" if c > 1 else f"y{i+1}" for i, c in enumerate(e) if c]
            return "*".join(parts) if parts else "1"

        return f"{mono(self.plus)} - {mono(self.minus)}"


ZERO = Binomial((), (), _zero=True)


def binomial(a: Vector, b: Vector, order: TermOrder) -> Binomial:
    """Orient a difference of monomials under the given order, collapsing y^a - y^a."""
    if a == b:
        return ZERO
    return Binomial(a, b) if order.greater(a, b) else Binomial(b, a)


@dataclass(frozen=True)
class BinomialIdealBasis:
    binomials: tuple[Binomial, ...]
    order: TermOrder
    reduced: bool = False


def _divides(a: Vector, b: Vector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def normal_form(f: Binomial, G: BinomialIdealBasis) -> Binomial:
    """Remainder of binomial division of f by the members of G.

    When G is a Groebner basis the result is the canonical normal form and is
    ZERO exactly for members of the ideal; otherwise the remainder is merely
    order-correct.  Both terms are fully reduced.
    """
    if f.is_zero:
        return ZERO
    order = G.order
    members = G.binomials
    plus, minus = f.plus, f.minus
    while True:
        reducer = next((g for g in members if _divides(g.plus, plus)), None)
        if reducer is None:
            break
        plus = vadd(vsub(plus, reducer.plus), reducer.minus)
        if plus == minus:
            return ZERO
        if order.greater(minus, plus):
            plus, minus = minus, plus
    while True:
        reducer = next((g for g in members if _divides(g.plus, minus)), None)
        if reducer is None:
            break
        minus = vadd(vsub(minus, reducer.plus), reducer.minus)
        if plus == minus:
            return ZERO
    return Binomial(plus, minus)


def spair(f: Binomial, g: Binomial, order: TermOrder) -> Binomial:
    """The S-polynomial of two binomials, itself a binomial (or ZERO)."""
    lcm = tuple(max(a, b) for a, b in zip(f.plus, g.plus))
    left = vadd(vsub(lcm, f.plus), f.minus)
    right = vadd(vsub(lcm, g.plus), g.minus)
    return binomial(left, right, order)


def buchberger(
    gens: Iterable[Binomial],
    order: TermOrder,
    *,
    max_steps: int | None = None,
) -> BinomialIdealBasis:
    """A Groebner basis of the ideal generated by pure-difference binomials.

    Normal selection strategy (smallest lcm first, FIFO ties) with the
    coprime-leading-term criterion; every S-pair remainder is a binomial, so
    the loop never leaves the two-term representation.
    """
    return _buchberger_extend([], gens, order, max_steps=max_steps)


def buchberger_extend(
    G: BinomialIdealBasis,
    new_gens: Iterable[Binomial],
    *,
    max_steps: int | None = None,
) -> BinomialIdealBasis:
    """Extend an existing Groebner basis with extra generators (pairs inside G are skipped)."""
    return _buchberger_extend(list(G.binomials), new_gens, G.order, max_steps=max_steps)


def _buchberger_extend(
    prefix: list[Binomial],
    gens: Iterable[Binomial],
    order: TermOrder,
    *,
    max_steps: int | None = None,
) -> BinomialIdealBasis:
    basis: list[Binomial] = list(prefix)
    counter = itertools.count()
    pairs: list[tuple[tuple, int, int, int]] = []

    def push_pairs(idx: int) -> None:
        g = basis[idx]
        for j in range(idx):
            h = basis[j]
            if all(a == 0 or b == 0 for a, b in zip(g.plus, h.plus)):
                continue  # coprime leading terms: S-pair reduces to zero
            lcm = tuple(max(a, b) for a, b in zip(g.plus, h.plus))
            heapq.heappush(pairs, (order.key(lcm), next(counter), idx, j))

    fresh = [b for b in gens if not b.is_zero]
    for b in fresh:
        basis.append(b)
        push_pairs(len(basis) - 1)

    steps = 0
    view = BinomialIdealBasis(tuple(basis), order)
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise ResourceLimitError(max_steps)
        s = spair(basis[i], basis[j], order)
        if s.is_zero:
            continue
        r = normal_form(s, view)
        if r.is_zero:
            continue
        basis.append(r)
        view = BinomialIdealBasis(tuple(basis), order)
        push_pairs(len(basis) - 1)
    return view


def reduce_basis(G: BinomialIdealBasis) -> BinomialIdealBasis:
    """The unique reduced Groebner basis of the ideal G generates.

    Requires G to be a Groebner basis already: leading terms are minimalized,
    every member is fully reduced against the others, and the result is
    canonically sorted, independent of the input presentation.
    """
    order = G.order
    members = [b for b in G.binomials if not b.is_zero]
    members.sort(key=lambda b: order.key(b.plus))
    minimal: list[Binomial] = []
    for b in members:
        if not any(_divides(m.plus, b.plus) for m in minimal):
            minimal.append(b)
    changed = True
    while changed:
        changed = False
        for i, b in enumerate(minimal):
            others = BinomialIdealBasis(tuple(minimal[:i] + minimal[i + 1 :]), order)
            r = normal_form(b, others)
            if r != b:
                if r.is_zero:
                    del minimal[i]
                else:
                    minimal[i] = r
                changed = True
                break
    minimal.sort(key=lambda b: (order.key(b.plus), order.key(b.minus)))
    return BinomialIdealBasis(tuple(minimal), order, reduced=True)


def toric_ideal(S: AffineSemigroup, *, max_steps: int | None = None) -> BinomialIdealBasis:
    """A reduced Groebner basis of the defining ideal of the semigroup.

    Variables y_1..y_k (one per atom) are joined by d auxiliary variables,
    one per ambient coordinate; the relations y_i = t^{atom_i} are completed
    under an order whose eliminated block is the auxiliary variables, and the
    members free of auxiliaries cut out the kernel of the monomial map.
    """
    k = len(S.generators)
    d = S.dim
    total = k + d
    elim_order = TermOrder.block_elim(total, range(k, total))
    gens = []
    for i, atom in enumerate(S.generators):
        y_part = tuple(1 if j == i else 0 for j in range(k)) + (0,) * d
        t_part = (0,) * k + atom
        gens.append(binomial(y_part, t_part, elim_order))
    full = buchberger(gens, elim_order, max_steps=max_steps)
    # the auxiliary-free members form a Groebner basis for the restriction of
    # the block order to the atom variables, which is graded lex
    y_order = TermOrder.grlex(k)
    projected = [
        binomial(b.plus[:k], b.minus[:k], y_order)
        for b in full.binomials
        if not any(b.plus[k:]) and not any(b.minus[k:])
    ]
    interim = BinomialIdealBasis(tuple(projected), y_order)
    return reduce_basis(interim)
