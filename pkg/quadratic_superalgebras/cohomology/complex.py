# Enumerated cochain bases and the matrices of δ between them

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple, Union

from ..core.algebra import LieSuperalgebra
from ..core.errors import EngineError, InputError
from ..core.linalg import Vector, rank
from ..exterior.cochain import Cochain
from ..exterior.differential import associated_three_form, coboundary_terms
from ..exterior.monomials import Monomial, canonical_order, monomial_basis
from ..exterior.poisson import differential_via_poisson
from ..quadratic.darboux import darboux_frame
from ..quadratic.form import QuadraticLieSuperalgebra

log = logging.getLogger(__name__)

AlgebraLike = Union[LieSuperalgebra, QuadraticLieSuperalgebra]


def algebra_of(g: AlgebraLike) -> LieSuperalgebra:
    return g.algebra if isinstance(g, QuadraticLieSuperalgebra) else g


@dataclass(frozen=True)
class CochainBasis:
    algebra: LieSuperalgebra
    degree: int
    monomials: Tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    @cached_property
    def position(self) -> Dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.monomials)}

    def coordinates(self, cochain: Cochain) -> Vector:
        if cochain.basis != self.algebra.basis:
            raise InputError("cochain lives over a different basis")
        vector = [Fraction(0)] * len(self.monomials)
        for monomial, coeff in cochain.terms.items():
            if monomial.degree != self.degree:
                raise InputError(
                    f"cochain has a term of degree {monomial.degree}, not {self.degree}"
                )
            vector[self.position[monomial]] = coeff
        return tuple(vector)

    def cochain(self, vector: Sequence[Fraction]) -> Cochain:
        return Cochain(self.algebra.basis, {m: c for m, c in zip(self.monomials, vector) if c})


@dataclass(frozen=True)
class DifferentialMatrix:
    # rows indexed by C^{k+1}, columns by C^k
    degree: int
    source: CochainBasis
    target: CochainBasis
    rows: Tuple[Vector, ...]

    @cached_property
    def rank(self) -> int:
        return rank(self.rows, len(self.source))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> Tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(len(self.source)))

    def apply(self, cochain: Cochain) -> Cochain:
        x = self.source.coordinates(cochain)
        image = [
            sum((a * b for a, b in zip(row, x) if a and b), Fraction(0)) for row in self.rows
        ]
        return self.target.cochain(image)


def cochain_basis(g: AlgebraLike, degree: int, limit: Optional[int] = None) -> CochainBasis:
    if degree < 0:
        raise InputError(f"cochain degree must be non-negative, got {degree}")
    algebra = algebra_of(g)
    return CochainBasis(algebra, degree, tuple(monomial_basis(algebra.basis, degree, limit)))


def differential_matrix(
    g: AlgebraLike,
    degree: int,
    limit: Optional[int] = None,
    cross_check: bool = False,
) -> DifferentialMatrix:
    """Matrix of δ_k: C^k -> C^{k+1}.

    Each target monomial M is evaluated once: the expansion of (δω)(M) into values of ω on
    shuffled tuples gives row M directly. With cross_check the columns are compared against
    -{I, ·} (quadratic algebras only).
    """
    algebra = algebra_of(g)
    source = cochain_basis(algebra, degree, limit)
    target = cochain_basis(algebra, degree + 1, limit)
    rows = []
    for monomial in target.monomials:
        row = [Fraction(0)] * len(source)
        if degree > 0:
            weight = monomial.symmetric_weight()
            for coeff, arguments in coboundary_terms(algebra, monomial.indices()):
                s, hit = canonical_order(arguments, algebra.basis)
                if hit is None:
                    continue
                row[source.position[hit]] += s * coeff * Fraction(hit.symmetric_weight(), weight)
        rows.append(tuple(row))
    matrix = DifferentialMatrix(degree, source, target, tuple(rows))
    log.debug(
        "%s: δ_%d is %dx%d of rank %d",
        algebra.name, degree, len(target), len(source), matrix.rank,
    )
    if cross_check and isinstance(g, QuadraticLieSuperalgebra):
        _cross_check(g, matrix)
    return matrix


def _cross_check(q: QuadraticLieSuperalgebra, matrix: DifferentialMatrix) -> None:
    frame = darboux_frame(q)
    three_form = associated_three_form(q)
    for j, monomial in enumerate(matrix.source.monomials):
        via_poisson = differential_via_poisson(
            q, Cochain(q.basis, {monomial: Fraction(1)}), frame, three_form
        )
        if matrix.target.coordinates(via_poisson) != matrix.column(j):
            raise EngineError(
                f"{q.name}: δ and -{{I, ·}} disagree on {monomial.format(q.basis.labels)}"
            )
