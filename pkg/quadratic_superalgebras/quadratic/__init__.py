# Invariant forms, Darboux frames and graded ideals

from .construction import (
    orthogonal_direct_sum,
    random_graded_change_of_basis,
    solve_odd_brackets_by_invariance,
)
from .darboux import DarbouxFrame, darboux_frame, standard_symplectic, symplectic_reduction
from .form import BilinearForm, QuadraticLieSuperalgebra, validate_form, validate_quadratic
from .ideals import (
    find_nondegenerate_central_line,
    is_nondegenerate_subspace,
    orthogonal_complement,
)

__all__ = [
    "orthogonal_direct_sum",
    "random_graded_change_of_basis",
    "solve_odd_brackets_by_invariance",
    "DarbouxFrame",
    "darboux_frame",
    "standard_symplectic",
    "symplectic_reduction",
    "BilinearForm",
    "QuadraticLieSuperalgebra",
    "validate_form",
    "validate_quadratic",
    "find_nondegenerate_central_line",
    "is_nondegenerate_subspace",
    "orthogonal_complement",
]
