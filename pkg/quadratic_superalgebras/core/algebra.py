# Lie superalgebras given by structure constants on a graded basis
# Constants are stored for i <= j only; the other order follows from skew-supersymmetry.

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import InputError
from .linalg import Subspace, Vector, apply, inverse, nullspace, transpose, unit_vector
from .reports import ValidationReport, Violation
from .scalars import ScalarLike, as_scalar, format_rational, sign

log = logging.getLogger(__name__)

BasisKey = Union[int, str]
SparseVector = Dict[int, Fraction]
BracketSpec = Tuple[BasisKey, BasisKey, Mapping[BasisKey, ScalarLike]]


@dataclass(frozen=True)
class GradedBasis:
    labels: Tuple[str, ...]
    parity: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(label) for label in self.labels))
        object.__setattr__(self, "parity", tuple(int(p) for p in self.parity))
        if len(self.labels) != len(self.parity):
            raise InputError(f"{len(self.labels)} labels but {len(self.parity)} parities")
        if len(set(self.labels)) != len(self.labels):
            raise InputError(f"duplicate basis labels in {self.labels}")
        if any(p not in (0, 1) for p in self.parity):
            raise InputError(f"parities must be 0 or 1, got {self.parity}")
        if list(self.parity) != sorted(self.parity):
            raise InputError("even basis vectors must precede odd ones")

    @classmethod
    def of(cls, even: Sequence[str], odd: Sequence[str] = ()) -> "GradedBasis":
        return cls(tuple(even) + tuple(odd), (0,) * len(even) + (1,) * len(odd))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def even_dim(self) -> int:
        return self.parity.count(0)

    @property
    def odd_dim(self) -> int:
        return self.parity.count(1)

    @property
    def even_indices(self) -> Tuple[int, ...]:
        return tuple(range(self.even_dim))

    @property
    def odd_indices(self) -> Tuple[int, ...]:
        return tuple(range(self.even_dim, self.dim))

    def index(self, key: BasisKey) -> int:
        if isinstance(key, int) and not isinstance(key, bool):
            if not 0 <= key < self.dim:
                raise InputError(f"basis index {key} out of range for dimension {self.dim}")
            return key
        try:
            return self.labels.index(str(key))
        except ValueError:
            raise InputError(f"unknown basis label {key!r}") from None

    def direct_sum(
        self, other: "GradedBasis"
    ) -> Tuple["GradedBasis", Tuple[int, ...], Tuple[int, ...]]:
        # Returns the combined basis and the index maps of both summands into it
        if set(self.labels) & set(other.labels):
            raise InputError("direct sum needs disjoint basis labels")
        order = (
            [(0, i) for i in self.even_indices]
            + [(1, i) for i in other.even_indices]
            + [(0, i) for i in self.odd_indices]
            + [(1, i) for i in other.odd_indices]
        )
        sources = (self, other)
        basis = GradedBasis(
            tuple(sources[s].labels[i] for s, i in order),
            tuple(sources[s].parity[i] for s, i in order),
        )
        maps = ([0] * self.dim, [0] * other.dim)
        for position, (s, i) in enumerate(order):
            maps[s][i] = position
        return basis, tuple(maps[0]), tuple(maps[1])


def _add_scaled(target: SparseVector, source: Mapping[int, Fraction], factor: Fraction) -> None:
    if not factor:
        return
    for k, c in source.items():
        value = target.get(k, Fraction(0)) + factor * c
        if value:
            target[k] = value
        else:
            target.pop(k, None)


@dataclass(frozen=True)
class LieSuperalgebra:
    basis: GradedBasis
    constants: Dict[Tuple[int, int], Dict[int, Fraction]] = field(default_factory=dict)
    name: str = ""
    # pairs given in both orders with values that disagree with skew-supersymmetry
    skew_conflicts: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_brackets(
        cls, basis: GradedBasis, brackets: Iterable[BracketSpec], name: str = ""
    ) -> "LieSuperalgebra":
        stored: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        given = set()
        seen = set()
        conflicts: List[Tuple[int, int]] = []
        for left, right, terms in brackets:
            i, j = basis.index(left), basis.index(right)
            if (i, j) in given:
                raise InputError(f"bracket [{basis.labels[i]}, {basis.labels[j]}] given twice")
            given.add((i, j))
            vector: SparseVector = {}
            for key, coeff in dict(terms).items():
                _add_scaled(vector, {basis.index(key): Fraction(1)}, as_scalar(coeff))
            if i > j:
                factor = Fraction(-sign(basis.parity[i] * basis.parity[j]))
                i, j = j, i
                vector = {k: factor * c for k, c in vector.items()}
            if (i, j) in seen:
                # both orders given; the first one wins
                if stored.get((i, j), {}) != vector:
                    conflicts.append((i, j))
                continue
            seen.add((i, j))
            if vector:
                stored[(i, j)] = vector
        if conflicts:
            log.debug("%s: %d skew-supersymmetry conflicts in the input", name, len(conflicts))
        return cls(basis, stored, name, tuple(conflicts))

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.basis.labels

    def parity(self, i: int) -> int:
        return self.basis.parity[i]

    @cached_property
    def _table(self) -> Dict[Tuple[int, int], Dict[int, Fraction]]:
        table = {}
        for (i, j), vector in self.constants.items():
            table[(i, j)] = dict(vector)
            if i != j:
                factor = -sign(self.parity(i) * self.parity(j))
                table[(j, i)] = {k: factor * c for k, c in vector.items()}
        return table

    def structure_constant(self, i: BasisKey, j: BasisKey) -> Dict[int, Fraction]:
        # [e_i, e_j] as a sparse vector
        return dict(self._table.get((self.basis.index(i), self.basis.index(j)), {}))

    def vector(self, key: BasisKey) -> Vector:
        return unit_vector(self.dim, self.basis.index(key))

    def coordinates(self, x: Sequence[ScalarLike]) -> Vector:
        if len(x) != self.dim:
            raise InputError(f"vector of length {len(x)} for an algebra of dimension {self.dim}")
        return tuple(as_scalar(c) for c in x)

    def sparse_bracket(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> SparseVector:
        result: SparseVector = {}
        for i, a in x.items():
            for j, b in y.items():
                entry = self._table.get((i, j))
                if entry and a and b:
                    _add_scaled(result, entry, a * b)
        return result

    def bracket(self, x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> Vector:
        x, y = self.coordinates(x), self.coordinates(y)
        sparse = self.sparse_bracket(
            {i: a for i, a in enumerate(x) if a}, {j: b for j, b in enumerate(y) if b}
        )
        return tuple(sparse.get(k, Fraction(0)) for k in range(self.dim))

    def adjoint(self, x: Sequence[ScalarLike]) -> Tuple[Vector, ...]:
        # Matrix of ad(x), columns are images of basis vectors
        columns = [self.bracket(x, unit_vector(self.dim, j)) for j in range(self.dim)]
        return transpose(columns)

    def structure_table(self) -> List[Tuple[str, str, Dict[str, Fraction]]]:
        return [
            (self.labels[i], self.labels[j], {self.labels[k]: c for k, c in sorted(vec.items())})
            for (i, j), vec in sorted(self.constants.items())
        ]

    def with_name(self, name: str) -> "LieSuperalgebra":
        return LieSuperalgebra(self.basis, self.constants, name, self.skew_conflicts)

    def replace_bracket(
        self, left: BasisKey, right: BasisKey, terms: Mapping[BasisKey, ScalarLike]
    ) -> "LieSuperalgebra":
        # Copy with [left, right] overwritten; the opposite order follows by skew-supersymmetry
        i, j = self.basis.index(left), self.basis.index(right)
        pair = (min(i, j), max(i, j))
        brackets = [(a, b, vec) for (a, b), vec in self.constants.items() if (a, b) != pair]
        brackets.append((i, j, {self.basis.index(k): v for k, v in terms.items()}))
        return LieSuperalgebra.from_brackets(self.basis, brackets, self.name)

    def reorder(self, labels: Sequence[str], name: Optional[str] = None) -> "LieSuperalgebra":
        # Same algebra with the basis listed in a new order
        if sorted(labels) != sorted(self.labels):
            raise InputError("reorder needs a permutation of the basis labels")
        old = [self.basis.index(label) for label in labels]
        position = {o: n for n, o in enumerate(old)}
        basis = GradedBasis(tuple(labels), tuple(self.parity(o) for o in old))
        brackets = [
            (position[i], position[j], {position[k]: c for k, c in vec.items()})
            for (i, j), vec in self.constants.items()
        ]
        return LieSuperalgebra.from_brackets(basis, brackets, name or self.name)

    def change_basis(
        self,
        vectors: Sequence[Sequence[ScalarLike]],
        labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
    ) -> "LieSuperalgebra":
        # vectors[i] holds the old coordinates of the new basis vector e'_i
        vectors = [self.coordinates(v) for v in vectors]
        if len(vectors) != self.dim:
            raise InputError(f"change of basis needs {self.dim} vectors, got {len(vectors)}")
        parity = tuple(homogeneous_parity(self.basis, v) for v in vectors)
        basis = GradedBasis(tuple(labels or self.labels), parity)
        to_new = inverse(transpose(vectors))
        brackets = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                image = apply(to_new, self.bracket(vectors[i], vectors[j]))
                if any(image):
                    brackets.append((i, j, {k: c for k, c in enumerate(image) if c}))
        return LieSuperalgebra.from_brackets(basis, brackets, name or self.name)

    def even_part(self) -> "LieSuperalgebra":
        basis = GradedBasis.of([self.labels[i] for i in self.basis.even_indices])
        brackets = [
            (i, j, vec) for (i, j), vec in self.constants.items() if self.parity(i) == 0
            and self.parity(j) == 0 and all(self.parity(k) == 0 for k in vec)
        ]
        return LieSuperalgebra.from_brackets(basis, brackets, f"{self.name}_0")

    def direct_sum(self, other: "LieSuperalgebra", name: str = "") -> "LieSuperalgebra":
        basis, left, right = self.basis.direct_sum(other.basis)
        brackets = []
        for algebra, index in ((self, left), (other, right)):
            for (i, j), vec in algebra.constants.items():
                brackets.append((index[i], index[j], {index[k]: c for k, c in vec.items()}))
        return LieSuperalgebra.from_brackets(basis, brackets, name or f"{self.name}+{other.name}")


def homogeneous_parity(basis: GradedBasis, vector: Sequence[Fraction]) -> int:
    support = {basis.parity[i] for i, c in enumerate(vector) if c}
    if len(support) != 1:
        raise InputError("graded change of basis needs nonzero homogeneous vectors")
    return support.pop()


def format_vector(g: LieSuperalgebra, x: Union[Sequence[Fraction], Mapping[int, Fraction]]) -> str:
    items = x.items() if isinstance(x, Mapping) else enumerate(x)
    terms = [f"{format_rational(c)}*{g.labels[k]}" for k, c in sorted(items) if c]
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def bracket(g: LieSuperalgebra, x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> Vector:
    return g.bracket(x, y)


def super_jacobiator(g: LieSuperalgebra, i: int, j: int, k: int) -> SparseVector:
    # (-1)^{zx}[[X,Y],Z] + (-1)^{xy}[[Y,Z],X] + (-1)^{yz}[[Z,X],Y]
    x, y, z = g.parity(i), g.parity(j), g.parity(k)
    result: SparseVector = {}
    for (a, b, c), exponent in (((i, j, k), z * x), ((j, k, i), x * y), ((k, i, j), y * z)):
        inner = g.sparse_bracket({a: Fraction(1)}, {b: Fraction(1)})
        _add_scaled(result, g.sparse_bracket(inner, {c: Fraction(1)}), Fraction(sign(exponent)))
    return result


def validate_super_jacobi(g: LieSuperalgebra) -> ValidationReport:
    violations = []
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                value = super_jacobiator(g, i, j, k)
                if value:
                    violations.append(
                        Violation(
                            "super Jacobi",
                            (g.labels[i], g.labels[j], g.labels[k]),
                            format_vector(g, value),
                        )
                    )
    log.debug("%s: super Jacobi checked on %d triples", g.name, g.dim**3)
    return ValidationReport(g.name or "algebra", tuple(violations))


def validate_grading_and_skew(g: LieSuperalgebra) -> ValidationReport:
    violations = []
    for (i, j), vector in sorted(g.constants.items()):
        target = (g.parity(i) + g.parity(j)) % 2
        for k in sorted(vector):
            if g.parity(k) != target:
                violations.append(
                    Violation(
                        "grading", (g.labels[i], g.labels[j]), f"component along {g.labels[k]}"
                    )
                )
        if i == j and g.parity(i) == 0:
            violations.append(
                Violation(
                    "skew-supersymmetry",
                    (g.labels[i], g.labels[i]),
                    "[X, X] must vanish for even X",
                )
            )
    for i, j in g.skew_conflicts:
        violations.append(
            Violation(
                "skew-supersymmetry",
                (g.labels[i], g.labels[j]),
                "both orders given with inconsistent values",
            )
        )
    return ValidationReport(g.name or "algebra", tuple(violations))


def validate_algebra(g: LieSuperalgebra) -> ValidationReport:
    return validate_grading_and_skew(g).merged(validate_super_jacobi(g))


def bracket_of_subspaces(g: LieSuperalgebra, left: Subspace, right: Subspace) -> Subspace:
    return Subspace.span([g.bracket(u, v) for u in left.rows for v in right.rows], g.dim)


def derived_series(g: LieSuperalgebra) -> List[Subspace]:
    # g, [g,g], [[g,g],[g,g]], ... until it stabilizes or reaches zero
    current = Subspace.whole(g.dim)
    series = [current]
    while not current.is_zero():
        following = bracket_of_subspaces(g, current, current)
        if following.dim == current.dim:
            break
        series.append(following)
        current = following
    log.debug("%s: derived series dims %s", g.name, [s.dim for s in series])
    return series


def is_solvable(g: LieSuperalgebra) -> bool:
    return derived_series(g)[-1].is_zero()


def center(g: LieSuperalgebra) -> Subspace:
    # Solved separately on each parity block so the generators come out homogeneous
    generators = []
    for indices in (g.basis.even_indices, g.basis.odd_indices):
        equations = []
        for j in range(g.dim):
            for k in range(g.dim):
                row = [g._table.get((i, j), {}).get(k, Fraction(0)) for i in indices]
                if any(row):
                    equations.append(row)
        for solution in nullspace(equations, len(indices)):
            full = [Fraction(0)] * g.dim
            for position, i in enumerate(indices):
                full[i] = solution[position]
            generators.append(full)
    return Subspace.span(generators, g.dim)


def subalgebra_closure(g: LieSuperalgebra, vectors: Iterable[Sequence[ScalarLike]]) -> Subspace:
    current = Subspace.span([g.coordinates(v) for v in vectors], g.dim)
    while True:
        grown = current + bracket_of_subspaces(g, current, current)
        if grown.dim == current.dim:
            return current
        current = grown


def is_ideal(g: LieSuperalgebra, subspace: Subspace) -> bool:
    return all(
        subspace.contains(g.bracket(u, unit_vector(g.dim, j)))
        for u in subspace.rows
        for j in range(g.dim)
    )


def is_graded(g: LieSuperalgebra, subspace: Subspace) -> bool:
    even = subspace.coordinate_part(g.basis.even_indices)
    odd = subspace.coordinate_part(g.basis.odd_indices)
    return even.dim + odd.dim == subspace.dim


def abelian_algebra(even_dim: int, odd_dim: int = 0, name: str = "") -> LieSuperalgebra:
    basis = GradedBasis.of(
        [f"E{i + 1}" for i in range(even_dim)], [f"O{i + 1}" for i in range(odd_dim)]
    )
    return LieSuperalgebra(basis, {}, name or f"abelian_{even_dim}_{odd_dim}")
