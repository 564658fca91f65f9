# Cocycles, coboundaries, Betti numbers and class representatives

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..core.errors import EngineError, InputError, ResourceLimitError
from ..core.linalg import Subspace, nullspace, rank
from ..exterior.cochain import Cochain
from ..exterior.differential import differential_direct
from ..exterior.monomials import cochain_dimension
from .complex import (
    AlgebraLike,
    CochainBasis,
    DifferentialMatrix,
    algebra_of,
    differential_matrix,
)

log = logging.getLogger(__name__)

DEFAULT_SIZE_GUARD = 200000


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    representatives: Tuple[Cochain, ...] = ()

    @property
    def betti(self) -> int:
        return self.dim_cocycles - self.dim_coboundaries


def _result_from(
    basis: CochainBasis,
    outgoing: DifferentialMatrix,
    incoming: Optional[DifferentialMatrix],
) -> CohomologyResult:
    n = len(basis)
    cocycles = Subspace.span(nullspace(outgoing.rows, n), n)
    coboundaries = Subspace.zero(n)
    if incoming is not None:
        coboundaries = Subspace.span(incoming.columns(), n)
    if outgoing.rank + cocycles.dim != n:
        raise EngineError(f"rank-nullity fails in degree {basis.degree}")
    # reduced-echelon completion of B^k inside Z^k
    span = coboundaries
    representatives = []
    for row in cocycles.rows:
        if not span.contains(row):
            span = span + Subspace.span([row], n)
            representatives.append(basis.cochain(row))
    result = CohomologyResult(
        basis.degree, n, cocycles.dim, coboundaries.dim, tuple(representatives)
    )
    log.debug(
        "%s: H^%d has Z=%d, B=%d, b=%d",
        basis.algebra.name,
        basis.degree,
        result.dim_cocycles,
        result.dim_coboundaries,
        result.betti,
    )
    return result


def _guard(g: AlgebraLike, degrees, limit: int) -> None:
    basis = algebra_of(g).basis
    for degree in degrees:
        size = cochain_dimension(basis, degree)
        if size > limit:
            raise ResourceLimitError(degree, size, limit)


def cohomology(
    g: AlgebraLike, degree: int, limit: int = DEFAULT_SIZE_GUARD, cross_check: bool = False
) -> CohomologyResult:
    if degree < 0:
        raise InputError(f"cohomology degree must be non-negative, got {degree}")
    _guard(g, range(max(degree - 1, 0), degree + 2), limit)
    outgoing = differential_matrix(g, degree, limit, cross_check)
    incoming = differential_matrix(g, degree - 1, limit, cross_check) if degree > 0 else None
    return _result_from(outgoing.source, outgoing, incoming)


def betti_table(
    g: AlgebraLike, max_degree: int, limit: int = DEFAULT_SIZE_GUARD, cross_check: bool = False
) -> List[CohomologyResult]:
    if max_degree < 0:
        raise InputError(f"max degree must be non-negative, got {max_degree}")
    _guard(g, range(max_degree + 2), limit)
    matrices = [differential_matrix(g, k, limit, cross_check) for k in range(max_degree + 1)]
    results = []
    for k, outgoing in enumerate(matrices):
        incoming = matrices[k - 1] if k > 0 else None
        results.append(_result_from(outgoing.source, outgoing, incoming))
    return results


def is_cocycle(g: AlgebraLike, cochain: Cochain) -> bool:
    return differential_direct(algebra_of(g), cochain).is_zero()


def coboundary_space(g: AlgebraLike, degree: int, limit: int = DEFAULT_SIZE_GUARD) -> Subspace:
    # B^k in the coordinates of the monomial basis of C^k
    if degree == 0:
        return Subspace.zero(1)
    incoming = differential_matrix(g, degree - 1, limit)
    return Subspace.span(incoming.columns(), len(incoming.target))


def is_nontrivial_class(
    g: AlgebraLike, degree: int, cochain: Cochain, limit: int = DEFAULT_SIZE_GUARD
) -> bool:
    # A cocycle of degree k that is not a coboundary
    if any(m.degree != degree for m in cochain.terms):
        raise InputError(f"cochain is not homogeneous of degree {degree}")
    if cochain.is_zero() or not is_cocycle(g, cochain):
        return False
    if degree == 0:
        return True
    incoming = differential_matrix(g, degree - 1, limit)
    columns = list(incoming.columns())
    vector = incoming.target.coordinates(cochain)
    n = len(incoming.target)
    return rank(columns + [vector], n) > rank(columns, n)


def betti_numbers(results: List[CohomologyResult]) -> Dict[int, int]:
    return {result.degree: result.betti for result in results}
