# The super Z×Z2-Poisson bracket on cochains of a quadratic Lie superalgebra

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..core.errors import InputError
from ..core.scalars import sign
from ..quadratic.darboux import DarbouxFrame, darboux_frame
from ..quadratic.form import QuadraticLieSuperalgebra
from .cochain import Cochain, contract, wedge
from .differential import associated_three_form
from .monomials import Monomial

log = logging.getLogger(__name__)


def _check(q: QuadraticLieSuperalgebra, *cochains: Cochain) -> None:
    for cochain in cochains:
        if cochain.basis != q.basis:
            raise InputError("cochain and quadratic algebra live over different bases")


def _split_by_degrees(cochain: Cochain) -> Dict[Tuple[int, int], Cochain]:
    # Pieces Alt^ω ⊗ Sym^f keyed by (ω, f)
    parts: Dict[Tuple[int, int], Dict[Monomial, Fraction]] = defaultdict(dict)
    for monomial, coeff in cochain.terms.items():
        parts[(monomial.even_degree, monomial.odd_degree)][monomial] = coeff
    return {key: Cochain(cochain.basis, terms) for key, terms in parts.items()}


def poisson_bracket(
    q: QuadraticLieSuperalgebra,
    frame: Optional[DarbouxFrame],
    left: Cochain,
    right: Cochain,
) -> Cochain:
    """{A, A'} in an arbitrary even basis and a Darboux odd frame.

    For A in Alt^ω ⊗ Sym^f:
        (-1)^{ω+f+1} Σ_ij B(Y^i, Y^j) ι_i A ∧ ι_j A'
        + (-1)^ω Σ_k (ι_{Y^k} A ∧ ι_{X^k} A' - ι_{X^k} A ∧ ι_{Y^k} A')
    where Y^i is the B-dual of the i-th even basis vector and (X^k, Y^k) is the odd frame.
    """
    _check(q, left, right)
    frame = frame or darboux_frame(q)
    basis = q.basis
    even = basis.even_indices
    weights = frame.even_weights
    right_even = {i: contract(basis, i, right) for i in even}
    odd_x = [frame.odd_x(k) for k in range(frame.n)]
    odd_y = [frame.odd_y(k) for k in range(frame.n)]
    right_x = [contract(basis, x, right) for x in odd_x]
    right_y = [contract(basis, y, right) for y in odd_y]

    result = Cochain.zero(basis)
    for (omega, f), part in _split_by_degrees(left).items():
        even_sum = Cochain.zero(basis)
        for a, i in enumerate(even):
            left_i = contract(basis, i, part)
            if left_i.is_zero():
                continue
            for b, j in enumerate(even):
                if weights[a][b] and not right_even[j].is_zero():
                    even_sum = even_sum + weights[a][b] * wedge(left_i, right_even[j])
        odd_sum = Cochain.zero(basis)
        for k in range(frame.n):
            odd_sum = odd_sum + wedge(contract(basis, odd_y[k], part), right_x[k])
            odd_sum = odd_sum - wedge(contract(basis, odd_x[k], part), right_y[k])
        result = result + sign(omega + f + 1) * even_sum + sign(omega) * odd_sum
    return result


def _alt_piece(basis, monomial: Monomial) -> Cochain:
    return Cochain(basis, {Monomial(monomial.even, ()): Fraction(1)})


def _sym_piece(basis, monomial: Monomial) -> Cochain:
    return Cochain(basis, {Monomial((), monomial.odd): Fraction(1)})


def poisson_bracket_product_form(
    q: QuadraticLieSuperalgebra,
    frame: Optional[DarbouxFrame],
    left: Cochain,
    right: Cochain,
) -> Cochain:
    """{Ω⊗F, Ω'⊗G} = (-1)^{fω'} ({Ω, Ω'} ⊗ FG + Ω∧Ω' ⊗ {F, G}), term by term.

    {Ω, Ω'} = (-1)^{ω+1} Σ_ij B(Y^i, Y^j) ι_i Ω ∧ ι_j Ω' on the alternating factor and
    {F, G} = Σ_k (∂_{Y^k} F ∂_{X^k} G - ∂_{X^k} F ∂_{Y^k} G) on the symmetric one.
    """
    _check(q, left, right)
    frame = frame or darboux_frame(q)
    basis = q.basis
    even = basis.even_indices
    weights = frame.even_weights
    odd_x = [frame.odd_x(k) for k in range(frame.n)]
    odd_y = [frame.odd_y(k) for k in range(frame.n)]

    result = Cochain.zero(basis)
    for m1, c1 in left.terms.items():
        alt1, sym1 = _alt_piece(basis, m1), _sym_piece(basis, m1)
        for m2, c2 in right.terms.items():
            alt2, sym2 = _alt_piece(basis, m2), _sym_piece(basis, m2)
            alt_bracket = Cochain.zero(basis)
            for a, i in enumerate(even):
                for b, j in enumerate(even):
                    if weights[a][b]:
                        alt_bracket = alt_bracket + weights[a][b] * wedge(
                            contract(basis, i, alt1), contract(basis, j, alt2)
                        )
            alt_bracket = sign(m1.even_degree + 1) * alt_bracket
            sym_bracket = Cochain.zero(basis)
            for k in range(frame.n):
                sym_bracket = sym_bracket + wedge(
                    contract(basis, odd_y[k], sym1), contract(basis, odd_x[k], sym2)
                )
                sym_bracket = sym_bracket - wedge(
                    contract(basis, odd_x[k], sym1), contract(basis, odd_y[k], sym2)
                )
            term = wedge(alt_bracket, wedge(sym1, sym2)) + wedge(wedge(alt1, alt2), sym_bracket)
            result = result + (sign(m1.odd_degree * m2.even_degree) * c1 * c2) * term
    return result


def differential_via_poisson(
    q: QuadraticLieSuperalgebra,
    cochain: Cochain,
    frame: Optional[DarbouxFrame] = None,
    three_form: Optional[Cochain] = None,
) -> Cochain:
    # δ = -{I, ·}
    _check(q, cochain)
    frame = frame or darboux_frame(q)
    three_form = three_form if three_form is not None else associated_three_form(q)
    return -poisson_bracket(q, frame, three_form, cochain)
