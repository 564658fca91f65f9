# Invariant bilinear forms and quadratic Lie superalgebras

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from ..core.algebra import BasisKey, GradedBasis, LieSuperalgebra, validate_algebra
from ..core.errors import InputError
from ..core.linalg import Vector, nullspace, rank
from ..core.reports import ValidationReport, Violation
from ..core.scalars import ScalarLike, as_scalar, format_rational, sign

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BilinearForm:
    basis: GradedBasis
    gram: Tuple[Vector, ...]

    def __post_init__(self):
        n = self.basis.dim
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise InputError(f"Gram matrix must be {n}x{n}")
        object.__setattr__(
            self, "gram", tuple(tuple(as_scalar(x) for x in row) for row in self.gram)
        )

    @classmethod
    def from_pairs(
        cls, basis: GradedBasis, pairs: Iterable[Tuple[BasisKey, BasisKey, ScalarLike]]
    ) -> "BilinearForm":
        # Entries not given explicitly are filled in by supersymmetry
        n = basis.dim
        gram = [[Fraction(0)] * n for _ in range(n)]
        explicit = set()
        for left, right, value in pairs:
            i, j = basis.index(left), basis.index(right)
            gram[i][j] = as_scalar(value)
            explicit.add((i, j))
        for i, j in list(explicit):
            if (j, i) not in explicit:
                gram[j][i] = sign(basis.parity[i] * basis.parity[j]) * gram[i][j]
        return cls(basis, tuple(tuple(row) for row in gram))

    @classmethod
    def zero(cls, basis: GradedBasis) -> "BilinearForm":
        return cls(basis, tuple((Fraction(0),) * basis.dim for _ in range(basis.dim)))

    def value(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.gram[i]
            for j, b in enumerate(y):
                if b and row[j]:
                    total += a * row[j] * b
        return total

    def block(self, indices: Sequence[int]) -> Tuple[Vector, ...]:
        return tuple(tuple(self.gram[i][j] for j in indices) for i in indices)

    def restricted_gram(self, vectors: Sequence[Sequence[Fraction]]) -> Tuple[Vector, ...]:
        return tuple(tuple(self.value(u, v) for v in vectors) for u in vectors)

    def rank(self) -> int:
        return rank(self.gram, self.basis.dim)

    def is_nondegenerate(self) -> bool:
        return self.rank() == self.basis.dim

    def pairs(self):
        # Nonzero entries with i <= j, the form's serialisable content
        return [
            (self.basis.labels[i], self.basis.labels[j], self.gram[i][j])
            for i in range(self.basis.dim)
            for j in range(i, self.basis.dim)
            if self.gram[i][j]
        ]


@dataclass(frozen=True)
class QuadraticLieSuperalgebra:
    algebra: LieSuperalgebra
    form: BilinearForm

    def __post_init__(self):
        if self.algebra.basis != self.form.basis:
            raise InputError("form and algebra are defined on different bases")

    @classmethod
    def build(
        cls,
        algebra: LieSuperalgebra,
        pairs: Iterable[Tuple[BasisKey, BasisKey, ScalarLike]],
    ) -> "QuadraticLieSuperalgebra":
        return cls(algebra, BilinearForm.from_pairs(algebra.basis, pairs))

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def basis(self) -> GradedBasis:
        return self.algebra.basis

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def B(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return self.form.value(x, y)

    def with_form(self, pairs) -> "QuadraticLieSuperalgebra":
        return QuadraticLieSuperalgebra.build(self.algebra, pairs)

    def reorder(self, labels: Sequence[str], name: Optional[str] = None):
        algebra = self.algebra.reorder(labels, name)
        old = [self.basis.index(label) for label in labels]
        gram = tuple(tuple(self.form.gram[i][j] for j in old) for i in old)
        return QuadraticLieSuperalgebra(algebra, BilinearForm(algebra.basis, gram))

    def change_basis(
        self,
        vectors: Sequence[Sequence[ScalarLike]],
        labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
    ) -> "QuadraticLieSuperalgebra":
        algebra = self.algebra.change_basis(vectors, labels, name)
        vectors = [self.algebra.coordinates(v) for v in vectors]
        return QuadraticLieSuperalgebra(
            algebra, BilinearForm(algebra.basis, self.form.restricted_gram(vectors))
        )


def validate_form(q: QuadraticLieSuperalgebra) -> ValidationReport:
    g, gram = q.algebra, q.form.gram
    labels = g.labels
    violations = []
    for i in range(g.dim):
        for j in range(i, g.dim):
            if gram[i][j] != sign(g.parity(i) * g.parity(j)) * gram[j][i]:
                violations.append(
                    Violation(
                        "supersymmetry",
                        (labels[i], labels[j]),
                        f"B = {format_rational(gram[i][j])}, "
                        f"reversed B = {format_rational(gram[j][i])}",
                    )
                )
            if g.parity(i) != g.parity(j) and (gram[i][j] or gram[j][i]):
                violations.append(Violation("evenness", (labels[i], labels[j])))
    for i in range(g.dim):
        ei = g.vector(i)
        for j in range(g.dim):
            ej = g.vector(j)
            left = g.bracket(ei, ej)
            for k in range(g.dim):
                ek = g.vector(k)
                lhs = q.form.value(left, ek)
                rhs = q.form.value(ei, g.bracket(ej, ek))
                if lhs != rhs:
                    violations.append(
                        Violation(
                            "invariance",
                            (labels[i], labels[j], labels[k]),
                            f"B([X,Y],Z) = {format_rational(lhs)}, "
                            f"B(X,[Y,Z]) = {format_rational(rhs)}",
                        )
                    )
    form_rank = q.form.rank()
    if form_rank < g.dim:
        kernel = nullspace(gram, g.dim)[0]
        violations.append(
            Violation(
                "non-degeneracy",
                tuple(labels[i] for i, c in enumerate(kernel) if c),
                f"rank {form_rank} < dim {g.dim}",
            )
        )
    return ValidationReport(g.name or "quadratic algebra", tuple(violations))


def validate_quadratic(q: QuadraticLieSuperalgebra, with_algebra: bool = False) -> ValidationReport:
    report = validate_form(q)
    if with_algebra:
        report = validate_algebra(q.algebra).merged(report)
    log.debug("%s: %d quadratic-structure violations", q.name, len(report))
    return report
