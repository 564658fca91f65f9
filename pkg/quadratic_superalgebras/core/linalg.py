# Exact linear algebra over the rationals
# Elimination runs in sympy's DomainMatrix over QQ; results come back as Fraction tuples.

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import InputError
from .scalars import as_scalar, from_sympy, to_sympy

log = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


def _clean_rows(rows: Iterable[Sequence], ncols: int) -> List[Vector]:
    cleaned = []
    for row in rows:
        if len(row) != ncols:
            raise InputError(f"row of length {len(row)} in a matrix with {ncols} columns")
        cleaned.append(tuple(as_scalar(x) for x in row))
    return cleaned


def to_domain_matrix(rows: Sequence[Vector], ncols: int) -> DomainMatrix:
    entries = [[QQ(x.numerator, x.denominator) for x in row] for row in rows]
    return DomainMatrix(entries, (len(rows), ncols), QQ)


def to_sympy_matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[to_sympy(as_scalar(x)) for x in row] for row in rows])


def from_sympy_matrix(matrix: sympy.Matrix) -> Tuple[Vector, ...]:
    return tuple(
        tuple(from_sympy(matrix[i, j]) for j in range(matrix.cols)) for i in range(matrix.rows)
    )


def rref(rows: Iterable[Sequence], ncols: int) -> Tuple[List[Vector], Tuple[int, ...]]:
    # Reduced row echelon form; zero rows are dropped and pivots are leftmost-first
    rows = _clean_rows(rows, ncols)
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    matrix = reduced.to_Matrix()
    basis = [tuple(from_sympy(matrix[i, j]) for j in range(ncols)) for i in range(len(pivots))]
    return basis, tuple(int(p) for p in pivots)


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    rows = _clean_rows(rows, ncols)
    if not rows or ncols == 0:
        return 0
    return int(to_domain_matrix(rows, ncols).rank())


def nullspace(rows: Iterable[Sequence], ncols: int) -> List[Vector]:
    # Kernel basis of the matrix with the given rows, one vector per free column
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        kernel.append(tuple(vector))
    return kernel


def inverse(rows: Sequence[Sequence[Fraction]]) -> Tuple[Vector, ...]:
    matrix = to_sympy_matrix(rows)
    if matrix.rows != matrix.cols or matrix.det() == 0:
        raise InputError("matrix is not invertible")
    return from_sympy_matrix(matrix.inv())


def matmul(left: Sequence[Sequence[Fraction]], right: Sequence[Sequence[Fraction]]):
    return from_sympy_matrix(to_sympy_matrix(left) * to_sympy_matrix(right))


def transpose(rows: Sequence[Sequence[Fraction]]) -> Tuple[Vector, ...]:
    return tuple(zip(*rows)) if rows else ()


def identity(n: int) -> Tuple[Vector, ...]:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def zero_vector(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


@dataclass(frozen=True)
class Subspace:
    # Subspace of Q^n stored as reduced echelon rows

    ambient_dim: int
    rows: Tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        reduced, _ = rref(list(vectors), ambient_dim)
        return cls(ambient_dim, tuple(reduced))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def whole(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def contains(self, vector: Sequence) -> bool:
        vector = tuple(as_scalar(x) for x in vector)
        if not any(vector):
            return True
        return rank(list(self.rows) + [vector], self.ambient_dim) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(list(self.rows) + list(other.rows), self.ambient_dim)

    def coordinate_part(self, indices: Sequence[int]) -> "Subspace":
        # Intersection with the coordinate subspace spanned by the given basis indices
        outside = [c for c in range(self.ambient_dim) if c not in set(indices)]
        if not self.rows:
            return self
        # combinations sum_r c_r row_r vanishing on every outside coordinate
        constraints = [[row[c] for row in self.rows] for c in outside]
        combos = nullspace(constraints, self.dim) if constraints else list(identity(self.dim))
        vectors = [
            tuple(sum((c * row[j] for c, row in zip(combo, self.rows)), Fraction(0))
                  for j in range(self.ambient_dim))
            for combo in combos
        ]
        return Subspace.span(vectors, self.ambient_dim)


def apply(matrix: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> Vector:
    # matrix @ vector with rows as given
    return tuple(
        sum((a * b for a, b in zip(row, vector) if a and b), Fraction(0)) for row in matrix
    )
