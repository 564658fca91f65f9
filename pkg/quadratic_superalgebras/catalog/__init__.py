# Named algebras; importing the builder modules fills the registry

from . import lie_algebras, superalgebras  # noqa: F401
from .lie_algebras import g_6_2_i_isomorphic, heisenberg, six_dimensional
from .registry import CatalogEntry, Constraint, build, entry, list_entries
from .superalgebras import extension_datum, g_4_1_s, g_4_2_s, g_6_s, reconstruct

__all__ = [
    "g_6_2_i_isomorphic",
    "heisenberg",
    "six_dimensional",
    "CatalogEntry",
    "Constraint",
    "build",
    "entry",
    "list_entries",
    "extension_datum",
    "g_4_1_s",
    "g_4_2_s",
    "g_6_s",
    "reconstruct",
]
