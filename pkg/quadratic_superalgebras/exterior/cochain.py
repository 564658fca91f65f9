# Sparse cochains over Alt(g0*) ⊗ Sym(g1*): linear structure, wedge, contraction, evaluation

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..core.algebra import BasisKey, GradedBasis
from ..core.errors import InputError
from ..core.scalars import ScalarLike, as_scalar, format_rational, sign
from .monomials import UNIT, Monomial, canonical_order, make_monomial, monomial_basis

log = logging.getLogger(__name__)

TermSpec = Tuple[Sequence[BasisKey], Sequence[BasisKey], ScalarLike]


def _accumulate(target: Dict[Monomial, Fraction], monomial: Monomial, value: Fraction) -> None:
    if not value:
        return
    total = target.get(monomial, Fraction(0)) + value
    if total:
        target[monomial] = total
    else:
        target.pop(monomial, None)


@dataclass(frozen=True)
class Cochain:
    basis: GradedBasis
    terms: Dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {m: c for m, c in self.terms.items() if c})

    @classmethod
    def zero(cls, basis: GradedBasis) -> "Cochain":
        return cls(basis, {})

    @classmethod
    def unit(cls, basis: GradedBasis) -> "Cochain":
        return cls(basis, {UNIT: Fraction(1)})

    @classmethod
    def generator(cls, basis: GradedBasis, key: BasisKey) -> "Cochain":
        # The dual basis functional e_i*
        i = basis.index(key)
        monomial = Monomial((i,), ()) if basis.parity[i] == 0 else Monomial((), (i,))
        return cls(basis, {monomial: Fraction(1)})

    @classmethod
    def from_terms(cls, basis: GradedBasis, terms: Iterable[TermSpec]) -> "Cochain":
        # Terms (even keys, odd keys, coefficient); even keys are wedged in the order given
        result: Dict[Monomial, Fraction] = {}
        for even, odd, coeff in terms:
            s, monomial = make_monomial(
                basis, [basis.index(k) for k in even], [basis.index(k) for k in odd]
            )
            if monomial is not None:
                _accumulate(result, monomial, s * as_scalar(coeff))
        return cls(basis, result)

    def _check(self, other: "Cochain") -> None:
        if not isinstance(other, Cochain) or other.basis != self.basis:
            raise InputError("cochains live over different bases")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        result = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(result, m, c)
        return Cochain(self.basis, result)

    def __neg__(self) -> "Cochain":
        return Cochain(self.basis, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __mul__(self, scalar: ScalarLike) -> "Cochain":
        factor = as_scalar(scalar)
        return Cochain(self.basis, {m: factor * c for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.terms.get(monomial, Fraction(0))

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def degrees(self) -> List[int]:
        return sorted({m.degree for m in self.terms})

    def bidegrees(self) -> List[Tuple[int, int]]:
        return sorted({m.bidegree for m in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def component(self, degree: int, parity: Optional[int] = None) -> "Cochain":
        return Cochain(
            self.basis,
            {
                m: c
                for m, c in self.terms.items()
                if m.degree == degree and (parity is None or m.parity == parity)
            },
        )

    def homogeneous_components(self) -> List["Cochain"]:
        return [self.component(d, p) for d, p in self.bidegrees()]

    def format(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for monomial, coeff in self.items():
            pieces.append(f"{format_rational(coeff)} * {monomial.format(self.basis.labels)}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()


def wedge(left: Cochain, right: Cochain) -> Cochain:
    # (Ω⊗F) ∧ (Ω'⊗F') = (-1)^{f ω'} (Ω∧Ω') ⊗ FF'
    left._check(right)
    result: Dict[Monomial, Fraction] = {}
    for m1, c1 in left.terms.items():
        for m2, c2 in right.terms.items():
            s, monomial = make_monomial(left.basis, m1.even + m2.even, m1.odd + m2.odd)
            if monomial is None:
                continue
            s *= sign(m1.odd_degree * m2.even_degree)
            _accumulate(result, monomial, s * c1 * c2)
    return Cochain(left.basis, result)


def wedge_all(cochains: Sequence[Cochain]) -> Cochain:
    if not cochains:
        raise InputError("wedge of an empty sequence")
    result = cochains[0]
    for cochain in cochains[1:]:
        result = wedge(result, cochain)
    return result


def power(cochain: Cochain, exponent: int) -> Cochain:
    result = Cochain.unit(cochain.basis)
    for _ in range(exponent):
        result = wedge(result, cochain)
    return result


def _contract_basis(k: int, cochain: Cochain) -> Dict[Monomial, Fraction]:
    result: Dict[Monomial, Fraction] = {}
    if cochain.basis.parity[k] == 0:
        for m, c in cochain.terms.items():
            if k in m.even:
                position = m.even.index(k)
                reduced = Monomial(m.even[:position] + m.even[position + 1 :], m.odd)
                _accumulate(result, reduced, sign(position) * c)
    else:
        for m, c in cochain.terms.items():
            multiplicity = m.odd.count(k)
            if multiplicity:
                position = m.odd.index(k)
                reduced = Monomial(m.even, m.odd[:position] + m.odd[position + 1 :])
                _accumulate(result, reduced, sign(m.even_degree) * multiplicity * c)
    return result


def contract(
    g, x: Union[BasisKey, Sequence[ScalarLike]], cochain: Cochain
) -> Cochain:
    """Contraction i_X, i_X(A)(X1, ...) = A(X, X1, ...).

    x is a basis label, a basis index or a coordinate vector; g is anything carrying the basis
    (an algebra, a quadratic algebra or the basis itself) and must match the cochain.
    """
    basis = getattr(g, "basis", g)
    if basis != cochain.basis:
        raise InputError("contraction vector and cochain live over different bases")
    if isinstance(x, (str, int)):
        x = [1 if i == basis.index(x) else 0 for i in range(basis.dim)]
    if len(x) != basis.dim:
        raise InputError(f"vector of length {len(x)} for dimension {basis.dim}")
    result: Dict[Monomial, Fraction] = {}
    for k, coeff in enumerate(x):
        coeff = as_scalar(coeff)
        if coeff:
            for m, c in _contract_basis(k, cochain).items():
                _accumulate(result, m, coeff * c)
    return Cochain(basis, result)


def evaluate_indices(cochain: Cochain, indices: Sequence[int]) -> Fraction:
    s, monomial = canonical_order(indices, cochain.basis)
    if monomial is None:
        return Fraction(0)
    coeff = cochain.terms.get(monomial)
    if not coeff:
        return Fraction(0)
    return s * coeff * monomial.symmetric_weight()


def evaluate(cochain: Cochain, arguments: Sequence) -> Fraction:
    # Arguments are basis keys or coordinate vectors; vectors are expanded multilinearly
    basis = cochain.basis
    expansions: List[List[Tuple[int, Fraction]]] = []
    for argument in arguments:
        if isinstance(argument, (str, int)):
            expansions.append([(basis.index(argument), Fraction(1))])
        else:
            if len(argument) != basis.dim:
                raise InputError(f"vector of length {len(argument)} for dimension {basis.dim}")
            expansions.append([(i, as_scalar(c)) for i, c in enumerate(argument) if c])
    total = Fraction(0)

    def walk(position: int, chosen: Tuple[int, ...], weight: Fraction) -> None:
        nonlocal total
        if position == len(expansions):
            total += weight * evaluate_indices(cochain, chosen)
            return
        for i, c in expansions[position]:
            walk(position + 1, chosen + (i,), weight * c)

    walk(0, (), Fraction(1))
    return total


def cochain_from_values(
    basis: GradedBasis,
    degree: int,
    values: Union[Callable[[Tuple[int, ...]], ScalarLike], Mapping[Tuple[int, ...], ScalarLike]],
) -> Cochain:
    # Dual pairing: reads the value on each canonical index tuple and divides out the weight
    lookup = values.get if isinstance(values, Mapping) else values
    result: Dict[Monomial, Fraction] = {}
    for monomial in monomial_basis(basis, degree):
        value = lookup(monomial.indices())
        if value is None:
            continue
        value = as_scalar(value)
        if value:
            result[monomial] = value / monomial.symmetric_weight()
    return Cochain(basis, result)


