# Scalars, exact linear algebra, errors, validation reports and Lie superalgebras

from .algebra import (
    GradedBasis,
    LieSuperalgebra,
    abelian_algebra,
    bracket,
    center,
    derived_series,
    format_vector,
    is_graded,
    is_ideal,
    is_solvable,
    subalgebra_closure,
    validate_algebra,
    validate_grading_and_skew,
    validate_super_jacobi,
)
from .errors import (
    DegenerateFormError,
    EngineError,
    InputError,
    PreconditionError,
    ResourceLimitError,
)
from .linalg import Subspace, nullspace, rank, rref
from .reports import ValidationReport, Violation
from .scalars import Scalar, as_scalar, format_rational, parse_rational

__all__ = [
    "GradedBasis",
    "LieSuperalgebra",
    "abelian_algebra",
    "bracket",
    "center",
    "derived_series",
    "format_vector",
    "is_graded",
    "is_ideal",
    "is_solvable",
    "subalgebra_closure",
    "validate_algebra",
    "validate_grading_and_skew",
    "validate_super_jacobi",
    "DegenerateFormError",
    "EngineError",
    "InputError",
    "PreconditionError",
    "ResourceLimitError",
    "Subspace",
    "nullspace",
    "rank",
    "rref",
    "ValidationReport",
    "Violation",
    "Scalar",
    "as_scalar",
    "format_rational",
    "parse_rational",
]
