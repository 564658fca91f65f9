# Cochain complexes, cohomology groups and Betti tables

from .complex import CochainBasis, DifferentialMatrix, cochain_basis, differential_matrix
from .groups import (
    DEFAULT_SIZE_GUARD,
    CohomologyResult,
    betti_numbers,
    betti_table,
    coboundary_space,
    cohomology,
    is_cocycle,
    is_nontrivial_class,
)
from .report import REPORT_SCHEMA, CohomologyEntry, CohomologyReport

__all__ = [
    "CochainBasis",
    "DifferentialMatrix",
    "cochain_basis",
    "differential_matrix",
    "DEFAULT_SIZE_GUARD",
    "CohomologyResult",
    "betti_numbers",
    "betti_table",
    "coboundary_space",
    "cohomology",
    "is_cocycle",
    "is_nontrivial_class",
    "REPORT_SCHEMA",
    "CohomologyEntry",
    "CohomologyReport",
]
