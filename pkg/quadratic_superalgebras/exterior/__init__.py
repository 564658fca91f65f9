# Super-exterior algebra: cochains, wedge, contraction, differential and Poisson bracket

from .cochain import (
    Cochain,
    cochain_from_values,
    contract,
    evaluate,
    evaluate_indices,
    power,
    wedge,
    wedge_all,
)
from .differential import (
    associated_three_form,
    coboundary_terms,
    coboundary_value,
    differential_direct,
)
from .monomials import (
    Monomial,
    bidegree_basis,
    canonical_order,
    cochain_dimension,
    monomial_basis,
)
from .poisson import differential_via_poisson, poisson_bracket, poisson_bracket_product_form
from .sampling import random_cochain, random_homogeneous_cochain

__all__ = [
    "Cochain",
    "cochain_from_values",
    "contract",
    "evaluate",
    "evaluate_indices",
    "power",
    "wedge",
    "wedge_all",
    "associated_three_form",
    "coboundary_terms",
    "coboundary_value",
    "differential_direct",
    "Monomial",
    "bidegree_basis",
    "canonical_order",
    "cochain_dimension",
    "monomial_basis",
    "differential_via_poisson",
    "poisson_bracket",
    "poisson_bracket_product_form",
    "random_cochain",
    "random_homogeneous_cochain",
]
