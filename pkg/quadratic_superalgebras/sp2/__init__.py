# The symplectic Lie algebra sp(2) over the rationals

from .toolbox import (
    ZERO,
    Classification,
    DependenceCertificate,
    EigenvectorRelation,
    H,
    NormalForm,
    Sp2Element,
    Sp2Kind,
    X,
    Y,
    ad_matrix,
    centralizer,
    check_commuting_dependence,
    check_eigenvector_relation,
    classify,
    commutator,
    conjugate,
    is_rational_square,
    normal_form,
    random_commuting_pair,
    random_commuting_triple,
    random_conjugator,
    random_element,
    solve_triple,
)

__all__ = [
    "ZERO",
    "Classification",
    "DependenceCertificate",
    "EigenvectorRelation",
    "H",
    "NormalForm",
    "Sp2Element",
    "Sp2Kind",
    "X",
    "Y",
    "ad_matrix",
    "centralizer",
    "check_commuting_dependence",
    "check_eigenvector_relation",
    "classify",
    "commutator",
    "conjugate",
    "is_rational_square",
    "normal_form",
    "random_commuting_pair",
    "random_commuting_triple",
    "random_conjugator",
    "random_element",
    "solve_triple",
]
