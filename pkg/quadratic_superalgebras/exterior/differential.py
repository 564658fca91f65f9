# The Chevalley-Eilenberg differential with trivial coefficients and the associated 3-form

import logging
from fractions import Fraction
from typing import Dict, Iterator, Sequence, Tuple

from ..core.algebra import LieSuperalgebra
from ..core.errors import InputError
from ..core.scalars import sign
from ..quadratic.form import QuadraticLieSuperalgebra
from .cochain import Cochain, cochain_from_values, evaluate_indices
from .monomials import Monomial, monomial_basis

log = logging.getLogger(__name__)


def coboundary_terms(
    g: LieSuperalgebra, xs: Sequence[int]
) -> Iterator[Tuple[Fraction, Tuple[int, ...]]]:
    """Expand (δω)(X_0, ..., X_k) as Σ coeff * ω(tuple) for basis vectors X_i = e_{xs[i]}.

    Sum over r < s of (-1)^{s + x_s(x_{r+1} + ... + x_{s-1})}
    ω(X_0, .., X_{r-1}, [X_r, X_s], X_{r+1}, .., X̂_s, .., X_k).
    """
    xs = tuple(xs)
    parities = [g.parity(i) for i in xs]
    for s in range(1, len(xs)):
        for r in range(s):
            image = g.structure_constant(xs[r], xs[s])
            if not image:
                continue
            exponent = s + parities[s] * sum(parities[r + 1 : s])
            head, middle, tail = xs[:r], xs[r + 1 : s], xs[s + 1 :]
            for k, c in image.items():
                yield sign(exponent) * c, head + (k,) + middle + tail


def coboundary_value(g: LieSuperalgebra, omega: Cochain, xs: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for coeff, arguments in coboundary_terms(g, xs):
        value = evaluate_indices(omega, arguments)
        if value:
            total += coeff * value
    return total


def differential_direct(g: LieSuperalgebra, cochain: Cochain) -> Cochain:
    # δ evaluated on every canonical tuple one degree up; δ on constants is zero
    if g.basis != cochain.basis:
        raise InputError("cochain and algebra live over different bases")
    result: Dict[Monomial, Fraction] = {}
    for degree in cochain.degrees():
        if degree == 0:
            continue
        part = cochain.component(degree)
        for monomial in monomial_basis(g.basis, degree + 1):
            value = coboundary_value(g, part, monomial.indices())
            if value:
                value /= monomial.symmetric_weight()
                result[monomial] = result.get(monomial, Fraction(0)) + value
    return Cochain(g.basis, result)


def associated_three_form(q: QuadraticLieSuperalgebra) -> Cochain:
    # I(X, Y, Z) = B([X, Y], Z)
    g = q.algebra

    def value(indices):
        x, y, z = indices
        return q.form.value(g.bracket(g.vector(x), g.vector(y)), g.vector(z))

    three_form = cochain_from_values(g.basis, 3, value)
    log.debug("%s: associated 3-form has %d terms", q.name, len(three_form))
    return three_form
