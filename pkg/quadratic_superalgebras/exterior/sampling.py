# Random cochains for the property suites

from typing import Optional

import numpy as np

from ..core.algebra import GradedBasis
from ..core.sampling import random_rational
from .cochain import Cochain
from .monomials import bidegree_basis, monomial_basis


def random_homogeneous_cochain(
    basis: GradedBasis,
    rng: np.random.Generator,
    even_degree: int,
    odd_degree: int,
    terms: int = 3,
    height: int = 5,
) -> Cochain:
    # Random element of Alt^{even_degree} ⊗ Sym^{odd_degree}; zero if that space is zero
    monomials = bidegree_basis(basis, even_degree, odd_degree)
    if not monomials:
        return Cochain.zero(basis)
    chosen = rng.choice(len(monomials), size=min(terms, len(monomials)), replace=False)
    return Cochain(
        basis, {monomials[int(i)]: random_rational(rng, height, nonzero=True) for i in chosen}
    )


def random_cochain(
    basis: GradedBasis,
    rng: np.random.Generator,
    degree: int,
    terms: int = 4,
    height: int = 5,
    parity: Optional[int] = None,
) -> Cochain:
    monomials = [
        m
        for m in monomial_basis(basis, degree)
        if parity is None or m.parity == parity
    ]
    if not monomials:
        return Cochain.zero(basis)
    chosen = rng.choice(len(monomials), size=min(terms, len(monomials)), replace=False)
    return Cochain(
        basis, {monomials[int(i)]: random_rational(rng, height, nonzero=True) for i in chosen}
    )
