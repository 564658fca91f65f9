# Homogeneous superderivations and the skew-supersymmetric ones Der_a(g, B)

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..core.algebra import LieSuperalgebra, format_vector, homogeneous_parity
from ..core.errors import InputError
from ..core.linalg import Vector, apply, matmul, nullspace, rank
from ..core.reports import ValidationReport, Violation
from ..core.scalars import ScalarLike, as_scalar, format_rational, sign
from ..quadratic.form import QuadraticLieSuperalgebra

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Superderivation:
    # Column j of matrix holds D(e_j)
    matrix: Tuple[Vector, ...]
    degree: int = 0

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise InputError("a superderivation needs a square matrix")
        if self.degree not in (0, 1):
            raise InputError(f"superderivation degree must be 0 or 1, got {self.degree}")
        object.__setattr__(
            self, "matrix", tuple(tuple(as_scalar(x) for x in row) for row in self.matrix)
        )

    @classmethod
    def zero(cls, dim: int, degree: int = 0) -> "Superderivation":
        return cls(tuple((Fraction(0),) * dim for _ in range(dim)), degree)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def apply(self, x: Sequence[Fraction]) -> Vector:
        return apply(self.matrix, x)

    def image(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def __add__(self, other: "Superderivation") -> "Superderivation":
        if other.degree != self.degree or other.dim != self.dim:
            raise InputError("superderivations of different degree or size")
        return Superderivation(
            tuple(
                tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.matrix, other.matrix)
            ),
            self.degree,
        )

    def __mul__(self, scalar: ScalarLike) -> "Superderivation":
        factor = as_scalar(scalar)
        return Superderivation(
            tuple(tuple(factor * x for x in row) for row in self.matrix), self.degree
        )

    __rmul__ = __mul__


def as_superderivation(
    matrix: Sequence[Sequence[ScalarLike]], degree: int = 0
) -> Superderivation:
    return Superderivation(tuple(tuple(row) for row in matrix), degree)


def inner_derivation(g: LieSuperalgebra, x: Sequence[ScalarLike]) -> Superderivation:
    # ad(x) for homogeneous x
    x = g.coordinates(x)
    degree = homogeneous_parity(g.basis, x) if any(x) else 0
    return Superderivation(g.adjoint(x), degree)


def lie_bracket_of_derivations(d1: Superderivation, d2: Superderivation) -> Superderivation:
    # [D1, D2] = D1 D2 - (-1)^{a1 a2} D2 D1
    first = matmul(d1.matrix, d2.matrix)
    second = matmul(d2.matrix, d1.matrix)
    s = sign(d1.degree * d2.degree)
    return Superderivation(
        tuple(tuple(a - s * b for a, b in zip(r1, r2)) for r1, r2 in zip(first, second)),
        (d1.degree + d2.degree) % 2,
    )


def _degree_violations(g: LieSuperalgebra, d: Superderivation) -> List[Violation]:
    violations = []
    for j in range(g.dim):
        for k in range(g.dim):
            if d.matrix[k][j] and g.parity(k) != (g.parity(j) + d.degree) % 2:
                violations.append(
                    Violation("degree", (g.labels[j],), f"D maps it onto {g.labels[k]}")
                )
                break
    return violations


def is_superderivation(
    g: LieSuperalgebra, matrix: Sequence[Sequence[ScalarLike]], degree: int
) -> ValidationReport:
    # D[X, Y] = [DX, Y] + (-1)^{a x}[X, DY] on every basis pair
    d = matrix if isinstance(matrix, Superderivation) else as_superderivation(matrix, degree)
    if d.dim != g.dim:
        raise InputError(f"derivation matrix must be {g.dim}x{g.dim}")
    violations = _degree_violations(g, d)
    images = [d.image(j) for j in range(g.dim)]
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = d.apply(g.bracket(g.vector(i), g.vector(j)))
            first = g.bracket(images[i], g.vector(j))
            second = g.bracket(g.vector(i), images[j])
            s = sign(d.degree * g.parity(i))
            defect = tuple(a - b - s * c for a, b, c in zip(lhs, first, second))
            if any(defect):
                violations.append(
                    Violation(
                        "superderivation",
                        (g.labels[i], g.labels[j]),
                        f"defect {format_vector(g, defect)}",
                    )
                )
    return ValidationReport(g.name or "algebra", tuple(violations))


def is_skew_supersymmetric(q: QuadraticLieSuperalgebra, d: Superderivation) -> ValidationReport:
    # B(DX, Y) = -(-1)^{a x} B(X, DY)
    g = q.algebra
    violations = []
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = q.form.value(d.image(i), g.vector(j))
            rhs = -sign(d.degree * g.parity(i)) * q.form.value(g.vector(i), d.image(j))
            if lhs != rhs:
                violations.append(
                    Violation(
                        "skew-supersymmetry",
                        (g.labels[i], g.labels[j]),
                        f"B(DX,Y) = {format_rational(lhs)}, expected {format_rational(rhs)}",
                    )
                )
    return ValidationReport(q.name or "quadratic algebra", tuple(violations))


def validate_skew_superderivation(
    q: QuadraticLieSuperalgebra, d: Superderivation
) -> ValidationReport:
    return is_superderivation(q.algebra, d, d.degree).merged(is_skew_supersymmetric(q, d))


def skew_superderivation_space(q: QuadraticLieSuperalgebra, degree: int) -> List[Superderivation]:
    """Basis of Der_a(g, B) in degree `degree`.

    Unknowns are the matrix entries allowed by the degree; the derivation rule and
    skew-supersymmetry give one linear system, solved exactly.
    """
    if degree not in (0, 1):
        raise InputError(f"degree must be 0 or 1, got {degree}")
    g = q.algebra
    n = g.dim
    unknowns: Dict[Tuple[int, int], int] = {}
    for k in range(n):
        for j in range(n):
            if g.parity(k) == (g.parity(j) + degree) % 2:
                unknowns[(k, j)] = len(unknowns)
    width = len(unknowns)
    table = {(i, j): g.structure_constant(i, j) for i in range(n) for j in range(n)}
    gram = q.form.gram
    equations = []

    def add(row: Dict[int, Fraction]) -> None:
        if any(row.values()):
            dense = [Fraction(0)] * width
            for u, c in row.items():
                dense[u] += c
            if any(dense):
                equations.append(dense)

    for i in range(n):
        s = sign(degree * g.parity(i))
        for j in range(n):
            # component t of D[e_i,e_j] - [De_i, e_j] - s [e_i, De_j]
            for t in range(n):
                row: Dict[int, Fraction] = {}
                for k, c in table[(i, j)].items():
                    if (t, k) in unknowns:
                        u = unknowns[(t, k)]
                        row[u] = row.get(u, Fraction(0)) + c
                for k in range(n):
                    c = table[(k, j)].get(t)
                    if c and (k, i) in unknowns:
                        u = unknowns[(k, i)]
                        row[u] = row.get(u, Fraction(0)) - c
                    c = table[(i, k)].get(t)
                    if c and (k, j) in unknowns:
                        u = unknowns[(k, j)]
                        row[u] = row.get(u, Fraction(0)) - s * c
                add(row)
            # B(De_i, e_j) + s B(e_i, De_j)
            row = {}
            for k in range(n):
                if gram[k][j] and (k, i) in unknowns:
                    u = unknowns[(k, i)]
                    row[u] = row.get(u, Fraction(0)) + gram[k][j]
                if gram[i][k] and (k, j) in unknowns:
                    u = unknowns[(k, j)]
                    row[u] = row.get(u, Fraction(0)) + s * gram[i][k]
            add(row)

    solutions = nullspace(equations, width)
    derivations = []
    for solution in solutions:
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for (k, j), u in unknowns.items():
            matrix[k][j] = solution[u]
        derivations.append(Superderivation(tuple(map(tuple, matrix)), degree))
    log.debug("%s: Der_a in degree %d has dimension %d", q.name, degree, len(derivations))
    return derivations


def in_span(derivation: Superderivation, space: Sequence[Superderivation]) -> bool:
    flat = [tuple(x for row in d.matrix for x in row) for d in space]
    target = tuple(x for row in derivation.matrix for x in row)
    width = len(target)
    return rank(flat + [target], width) == rank(flat, width)
