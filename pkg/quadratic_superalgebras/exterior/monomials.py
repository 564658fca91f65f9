# Bigraded monomials e(I) ⊗ s(J) of Alt(g0*) ⊗ Sym(g1*) and their enumeration

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from ..core.algebra import GradedBasis
from ..core.errors import InputError, ResourceLimitError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Monomial:
    # Global basis indices: even part strictly increasing, odd part weakly increasing
    even: Tuple[int, ...] = ()
    odd: Tuple[int, ...] = ()

    @property
    def even_degree(self) -> int:
        return len(self.even)

    @property
    def odd_degree(self) -> int:
        return len(self.odd)

    @property
    def degree(self) -> int:
        return len(self.even) + len(self.odd)

    @property
    def parity(self) -> int:
        return len(self.odd) % 2

    @property
    def bidegree(self) -> Tuple[int, int]:
        return self.degree, self.parity

    def indices(self) -> Tuple[int, ...]:
        return self.even + self.odd

    def symmetric_weight(self) -> int:
        # Value of the monomial on its own index tuple
        weight = 1
        for multiplicity in Counter(self.odd).values():
            weight *= factorial(multiplicity)
        return weight

    def sort_key(self):
        return self.degree, self.odd_degree, self.even, self.odd

    def format(self, labels: Sequence[str]) -> str:
        parts = []
        if self.even:
            parts.append("e(" + "^".join(labels[i] for i in self.even) + ")")
        if self.odd:
            parts.append("s(" + " ".join(labels[j] for j in self.odd) + ")")
        return " ⊗ ".join(parts) if parts else "1"


UNIT = Monomial()


def swap_sign(parity_u: int, parity_v: int) -> int:
    # omega(.., X, Y, ..) = -(-1)^{xy} omega(.., Y, X, ..)
    return 1 if parity_u and parity_v else -1


def canonical_order(indices: Sequence[int], basis: GradedBasis) -> Tuple[int, Optional[Monomial]]:
    """Sort a tuple of basis indices into monomial order.

    Returns the accumulated super-alternating sign and the monomial, or (0, None) when an even
    index repeats.
    """
    items = list(indices)
    parity = basis.parity
    result_sign = 1
    # insertion sort, one adjacent swap at a time
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            result_sign *= swap_sign(parity[items[b - 1]], parity[items[b]])
            items[b - 1], items[b] = items[b], items[b - 1]
            b -= 1
    even = tuple(i for i in items if parity[i] == 0)
    if len(set(even)) != len(even):
        return 0, None
    odd = tuple(i for i in items if parity[i] == 1)
    return result_sign, Monomial(even, odd)


def make_monomial(
    basis: GradedBasis, even: Sequence[int], odd: Sequence[int]
) -> Tuple[int, Optional[Monomial]]:
    # Product e^{even[0]} ^ ... ⊗ f^{odd[0]} ... in canonical form with its sign
    for i in even:
        if basis.parity[i] != 0:
            raise InputError(f"{basis.labels[i]} is odd but used in the alternating part")
    for j in odd:
        if basis.parity[j] != 1:
            raise InputError(f"{basis.labels[j]} is even but used in the symmetric part")
    items = list(even)
    result_sign = 1
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            result_sign = -result_sign
            items[b - 1], items[b] = items[b], items[b - 1]
            b -= 1
    if len(set(items)) != len(items):
        return 0, None
    return result_sign, Monomial(tuple(items), tuple(sorted(odd)))


def cochain_dimension(basis: GradedBasis, degree: int) -> int:
    m, r = basis.even_dim, basis.odd_dim
    total = 0
    for b in range(degree + 1):
        a = degree - b
        if a > m or (b and not r):
            continue
        total += comb(m, a) * (comb(r + b - 1, b) if b else 1)
    return total


def monomial_basis(
    basis: GradedBasis, degree: int, limit: Optional[int] = None
) -> List[Monomial]:
    # All monomials of total degree `degree`, odd degree increasing
    if degree < 0:
        return []
    size = cochain_dimension(basis, degree)
    if limit is not None and size > limit:
        raise ResourceLimitError(degree, size, limit)
    monomials = []
    for b in range(degree + 1):
        a = degree - b
        if a > basis.even_dim:
            continue
        for even in combinations(basis.even_indices, a):
            for odd in combinations_with_replacement(basis.odd_indices, b):
                monomials.append(Monomial(even, odd))
    log.debug("C^%d has %d monomials", degree, len(monomials))
    return monomials


def bidegree_basis(basis: GradedBasis, even_degree: int, odd_degree: int) -> List[Monomial]:
    return [
        Monomial(even, odd)
        for even in combinations(basis.even_indices, even_degree)
        for odd in combinations_with_replacement(basis.odd_indices, odd_degree)
    ]
