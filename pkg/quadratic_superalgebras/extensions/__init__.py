# Superderivations and double extensions

from .derivations import (
    Superderivation,
    as_superderivation,
    in_span,
    inner_derivation,
    is_skew_supersymmetric,
    is_superderivation,
    lie_bracket_of_derivations,
    skew_superderivation_space,
    validate_skew_superderivation,
)
from .double_extension import (
    ExtensionDatum,
    double_extension,
    one_dim_datum,
    one_dim_double_extension,
    random_extension_datum,
    validate_extension_datum,
)

__all__ = [
    "Superderivation",
    "as_superderivation",
    "in_span",
    "inner_derivation",
    "is_skew_supersymmetric",
    "is_superderivation",
    "lie_bracket_of_derivations",
    "skew_superderivation_space",
    "validate_skew_superderivation",
    "ExtensionDatum",
    "double_extension",
    "one_dim_datum",
    "one_dim_double_extension",
    "random_extension_datum",
    "validate_extension_datum",
]
