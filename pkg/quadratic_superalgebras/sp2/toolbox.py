# Computations in sp(2): traceless 2x2 rational matrices ((a, b), (c, -a)) = aH + bX + cY

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..core.errors import EngineError, InputError, PreconditionError
from ..core.linalg import Vector, inverse, matmul, nullspace, rref, to_sympy_matrix
from ..core.sampling import random_invertible, random_rational
from ..core.scalars import ScalarLike, as_scalar, format_rational, from_sympy, to_sympy

log = logging.getLogger(__name__)

Matrix2 = Tuple[Vector, Vector]


@dataclass(frozen=True)
class Sp2Element:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    @classmethod
    def from_vector(cls, vector: Sequence[ScalarLike]) -> "Sp2Element":
        a, b, c = vector
        return cls(a, b, c)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[ScalarLike]]) -> "Sp2Element":
        (m11, m12), (m21, m22) = [[as_scalar(x) for x in row] for row in matrix]
        if m11 + m22:
            trace = format_rational(m11 + m22)
            raise InputError(f"sp(2) needs a traceless matrix, trace is {trace}")
        return cls(m11, m12, m21)

    def to_matrix(self) -> Matrix2:
        return ((self.a, self.b), (self.c, -self.a))

    def vector(self) -> Vector:
        return (self.a, self.b, self.c)

    @property
    def discriminant(self) -> Fraction:
        # the square of the eigenvalues
        return self.a * self.a + self.b * self.c

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c)

    def __add__(self, other: "Sp2Element") -> "Sp2Element":
        return Sp2Element(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "Sp2Element") -> "Sp2Element":
        return Sp2Element(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "Sp2Element":
        return Sp2Element(-self.a, -self.b, -self.c)

    def __mul__(self, scalar: ScalarLike) -> "Sp2Element":
        t = as_scalar(scalar)
        return Sp2Element(t * self.a, t * self.b, t * self.c)

    __rmul__ = __mul__

    def __str__(self) -> str:
        a, b, c = (format_rational(x) for x in self.vector())
        return f"(({a}, {b}), ({c}, {format_rational(-self.a)}))"


H = Sp2Element(1, 0, 0)
X = Sp2Element(0, 1, 0)
Y = Sp2Element(0, 0, 1)
ZERO = Sp2Element()


class Sp2Kind(str, enum.Enum):
    ZERO = "zero"
    NILPOTENT = "nilpotent"
    SEMISIMPLE = "semisimple"


@dataclass(frozen=True)
class Classification:
    kind: Sp2Kind
    discriminant: Fraction

    @property
    def rational_eigenvalues(self) -> bool:
        return is_rational_square(self.discriminant)


def is_rational_square(value: Fraction) -> bool:
    return value >= 0 and bool(sympy.sqrt(to_sympy(value)).is_Rational)


def classify(element: Sp2Element) -> Classification:
    if element.is_zero():
        return Classification(Sp2Kind.ZERO, Fraction(0))
    disc = element.discriminant
    kind = Sp2Kind.NILPOTENT if disc == 0 else Sp2Kind.SEMISIMPLE
    return Classification(kind, disc)


def commutator(left: Sp2Element, right: Sp2Element) -> Sp2Element:
    # (bc' - b'c)H + 2(ab' - a'b)X - 2(ac' - a'c)Y
    a, b, c = left.vector()
    a2, b2, c2 = right.vector()
    return Sp2Element(b * c2 - b2 * c, 2 * (a * b2 - a2 * b), -2 * (a * c2 - a2 * c))


def ad_matrix(element: Sp2Element) -> Tuple[Vector, ...]:
    # ad(A) on the coordinates (a, b, c), columns are [A, H], [A, X], [A, Y]
    a, b, c = element.vector()
    return (
        (Fraction(0), -c, b),
        (-2 * b, 2 * a, Fraction(0)),
        (2 * c, Fraction(0), -2 * a),
    )


def centralizer(element: Sp2Element) -> List[Sp2Element]:
    return [Sp2Element.from_vector(v) for v in nullspace(ad_matrix(element), 3)]


@dataclass(frozen=True)
class DependenceCertificate:
    # mu * A + nu * B = 0 when dependent
    dependent: bool
    mu: Fraction = Fraction(0)
    nu: Fraction = Fraction(0)


def check_commuting_dependence(left: Sp2Element, right: Sp2Element) -> DependenceCertificate:
    if not commutator(left, right).is_zero():
        raise PreconditionError(f"[A, B] = {commutator(left, right)} is not zero")
    if right.is_zero():
        return DependenceCertificate(True, Fraction(0), Fraction(1))
    if left.is_zero():
        return DependenceCertificate(True, Fraction(1), Fraction(0))
    pivot = next(i for i, x in enumerate(left.vector()) if x)
    ratio = right.vector()[pivot] / left.vector()[pivot]
    if right == left * ratio:
        return DependenceCertificate(True, ratio, Fraction(-1))
    log.warning("commuting pair %s, %s is linearly independent", left, right)
    return DependenceCertificate(False)


@dataclass(frozen=True)
class EigenvectorRelation:
    semisimple_half: bool
    b_nilpotent: bool


def check_eigenvector_relation(left: Sp2Element, right: Sp2Element) -> EigenvectorRelation:
    # For [A, B] = B with B nonzero: A is semisimple with eigenvalues 1/2, -1/2 and B nilpotent
    if right.is_zero():
        raise PreconditionError("B must be nonzero")
    if commutator(left, right) != right:
        raise PreconditionError(f"[A, B] = {commutator(left, right)} differs from B = {right}")
    return EigenvectorRelation(
        classify(left) == Classification(Sp2Kind.SEMISIMPLE, Fraction(1, 4)),
        classify(right).kind is Sp2Kind.NILPOTENT,
    )


def conjugate(element: Sp2Element, g: Sequence[Sequence[ScalarLike]]) -> Sp2Element:
    # g A g^{-1} for an invertible rational 2x2 matrix g
    g = tuple(tuple(as_scalar(x) for x in row) for row in g)
    return Sp2Element.from_matrix(matmul(matmul(g, element.to_matrix()), inverse(g)))


@dataclass(frozen=True)
class NormalForm:
    """g A g^{-1} = form, diagonal diag(l, -l) with l > 0 or X for nilpotent A.

    form and conjugator stay None when the eigenvalues are irrational.
    """

    classification: Classification
    form: Optional[Sp2Element]
    conjugator: Optional[Matrix2]


def normal_form(element: Sp2Element) -> NormalForm:
    info = classify(element)
    if info.kind is Sp2Kind.ZERO:
        return NormalForm(info, element, ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))
    if not info.rational_eigenvalues:
        log.debug("%s: semisimple with irrational eigenvalues", element)
        return NormalForm(info, None, None)
    P, J = to_sympy_matrix(element.to_matrix()).jordan_form()
    if info.kind is Sp2Kind.SEMISIMPLE and J[0, 0] < J[1, 1]:
        P = P.extract([0, 1], [1, 0])
        J = sympy.diag(J[1, 1], J[0, 0])
    form = Sp2Element.from_matrix([[from_sympy(J[i, j]) for j in range(2)] for i in range(2)])
    g = P.inv()
    conjugator = tuple(tuple(from_sympy(g[i, j]) for j in range(2)) for i in range(2))
    if conjugate(element, conjugator) != form:
        raise EngineError(f"normal form of {element} failed to verify")
    return NormalForm(info, form, conjugator)


def solve_triple(left: Sp2Element, top: Sp2Element) -> Optional[Sp2Element]:
    """Some B with [A, B] = C and [B, C] = 0, or None when the system is inconsistent."""
    # augmented rows (coefficients | right-hand side) in the coordinates of B
    rows = [row + (rhs,) for row, rhs in zip(ad_matrix(left), top.vector())]
    rows += [row + (Fraction(0),) for row in ad_matrix(top)]
    reduced, pivots = rref(rows, 4)
    if 3 in pivots:
        return None
    solution = [Fraction(0)] * 3
    for row, pivot in zip(reduced, pivots):
        solution[pivot] = row[3]
    return Sp2Element.from_vector(solution)


def random_element(rng: np.random.Generator, height: int = 5) -> Sp2Element:
    return Sp2Element(*(random_rational(rng, height) for _ in range(3)))


def random_conjugator(rng: np.random.Generator, height: int = 3) -> Matrix2:
    return tuple(random_invertible(rng, 2, height))


def random_commuting_pair(
    rng: np.random.Generator, height: int = 5
) -> Tuple[Sp2Element, Sp2Element]:
    # One in five pairs has a zero member, the rest draw B from the centralizer of A
    choice = int(rng.integers(0, 10))
    if choice == 0:
        return ZERO, random_element(rng, height)
    if choice == 1:
        return random_element(rng, height), ZERO
    left = random_element(rng, height)
    right = ZERO
    for basis_element in centralizer(left):
        right = right + basis_element * random_rational(rng, height)
    return left, right


def random_commuting_triple(
    rng: np.random.Generator, height: int = 5
) -> Optional[Tuple[Sp2Element, Sp2Element, Sp2Element]]:
    """A, and C drawn from the centralizer of A, then B solved from [A, B] = C, [B, C] = 0.

    Returns None when no such B exists.
    """
    left = random_element(rng, height)
    top = ZERO
    for basis_element in centralizer(left):
        top = top + basis_element * random_rational(rng, height)
    middle = solve_triple(left, top)
    if middle is None:
        return None
    return left, middle, top
