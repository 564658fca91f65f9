# Elementary quadratic Lie superalgebras and the 8-dimensional solvable ones whose even part is
# one of g_6_1, g_6_2(lambda), g_6_3 and whose odd part is the symplectic plane B(Y, T) = 1

import logging
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence

from ..core.algebra import GradedBasis, LieSuperalgebra
from ..core.errors import InputError
from ..core.scalars import ScalarLike
from ..extensions.derivations import Superderivation
from ..extensions.double_extension import ExtensionDatum, double_extension, one_dim_datum
from ..quadratic.construction import orthogonal_direct_sum, solve_odd_brackets_by_invariance
from ..quadratic.form import QuadraticLieSuperalgebra
from .lie_algebras import SIX_BASIS, g_6_1, g_6_2, g_6_3, six_dimensional
from .registry import CatalogEntry, Constraint, equals, entry, nonzero, register

log = logging.getLogger(__name__)

ODD_LABELS = ("Y", "T")
ODD_FORM = [("Y", "T", 1)]


def _matrix(rows: Sequence[Sequence[ScalarLike]]):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def diagonal(value: ScalarLike):
    return _matrix([[value, 0], [0, -Fraction(value)]])


def nilpotent(value: ScalarLike = 1):
    # ad(W) T = value * Y
    return _matrix([[0, value], [0, 0]])


def g_4_1_s() -> QuadraticLieSuperalgebra:
    basis = GradedBasis.of(["X0", "Y0"], ["X1", "Y1"])
    brackets = [("Y1", "Y1", {"X0": -2}), ("Y0", "Y1", {"X1": -2})]
    algebra = LieSuperalgebra.from_brackets(basis, brackets, "g_4_1_s")
    return QuadraticLieSuperalgebra.build(algebra, [("X0", "Y0", 1), ("X1", "Y1", 1)])


def g_4_2_s() -> QuadraticLieSuperalgebra:
    basis = GradedBasis.of(["X0", "Y0"], ["X1", "Y1"])
    brackets = [("X1", "Y1", {"X0": 1}), ("Y0", "X1", {"X1": 1}), ("Y0", "Y1", {"Y1": -1})]
    algebra = LieSuperalgebra.from_brackets(basis, brackets, "g_4_2_s")
    return QuadraticLieSuperalgebra.build(algebra, [("X0", "Y0", 1), ("X1", "Y1", 1)])


def g_6_s() -> QuadraticLieSuperalgebra:
    basis = GradedBasis.of(["X0", "Y0"], ["X1", "Y1", "Z1", "T1"])
    brackets = [("Z1", "T1", {"X0": -1}), ("Y0", "Z1", {"Y1": -1}), ("Y0", "T1", {"X1": -1})]
    algebra = LieSuperalgebra.from_brackets(basis, brackets, "g_6_s")
    return QuadraticLieSuperalgebra.build(
        algebra, [("X0", "Y0", 1), ("X1", "Z1", 1), ("Y1", "T1", 1)]
    )


def _odd_module(base: QuadraticLieSuperalgebra, actions: Dict, name: str):
    return solve_odd_brackets_by_invariance(base, ODD_LABELS, ODD_FORM, actions, name)


# g_0 = g_6_1: only X1, X2, X3 act, all diagonal or all nilpotent


def g_8_2_1_s(lam: Fraction, mu: Fraction, nu: Fraction) -> QuadraticLieSuperalgebra:
    actions = {"X1": diagonal(lam), "X2": diagonal(mu), "X3": diagonal(nu)}
    return _odd_module(g_6_1(), actions, "g_8_2_1_s")


def g_8_2_2_s(lam: Fraction, mu: Fraction) -> QuadraticLieSuperalgebra:
    actions = {"X1": nilpotent(lam), "X2": nilpotent(mu), "X3": nilpotent()}
    return _odd_module(g_6_1(), actions, "g_8_2_2_s")


# g_0 = g_6_2(lambda)


def g_8_2_3_s(lam: Fraction) -> QuadraticLieSuperalgebra:
    return _odd_module(g_6_2(lam), {"X3": nilpotent()}, "g_8_2_3_s")


def g_8_2_4_s(lam: Fraction, mu: Fraction) -> QuadraticLieSuperalgebra:
    return _odd_module(g_6_2(lam), {"X3": diagonal(mu)}, "g_8_2_4_s")


def g_8_2_5_s(lam: Fraction) -> QuadraticLieSuperalgebra:
    actions = {"X3": diagonal(Fraction(1, 2)), "Z1": nilpotent()}
    return _odd_module(g_6_2(lam), actions, "g_8_2_5_s")


def g_8_2_6_s(lam: Fraction, mu: Fraction) -> QuadraticLieSuperalgebra:
    # Z2 can only act when lambda = 1
    actions = {"X3": diagonal(Fraction(1, 2)), "Z1": nilpotent(), "Z2": nilpotent(mu)}
    return _odd_module(g_6_2(lam), actions, "g_8_2_6_s")


# g_0 = g_6_3


def g_8_2_7_s() -> QuadraticLieSuperalgebra:
    return _odd_module(g_6_3(), {"X3": nilpotent()}, "g_8_2_7_s")


def g_8_2_8_s(lam: Fraction) -> QuadraticLieSuperalgebra:
    return _odd_module(g_6_3(), {"X3": diagonal(lam)}, "g_8_2_8_s")


def g_8_2_9_s() -> QuadraticLieSuperalgebra:
    actions = {"X3": diagonal(Fraction(1, 2)), "Z2": nilpotent()}
    return _odd_module(g_6_3(), actions, "g_8_2_9_s")


def symplectic_plane() -> QuadraticLieSuperalgebra:
    algebra = LieSuperalgebra(GradedBasis.of([], ODD_LABELS), {}, "plane")
    return QuadraticLieSuperalgebra.build(algebra, ODD_FORM)


def g_8_decomposable(base: Fraction, lam: Fraction) -> QuadraticLieSuperalgebra:
    # g_0 and the odd plane orthogonal, [g_0, g_1] = 0
    return orthogonal_direct_sum(
        six_dimensional(int(base), lam), symplectic_plane(), f"g_8_decomposable_{int(base)}"
    )


# One-dimensional double extension data: the algebra is recovered from
# q = span{Z1, Z2, X1, X2} + span{Y, T} extended by e = X3, f = Z3 with D = ad(X3) on q.

REDUCED_BASIS = GradedBasis.of(["Z1", "Z2", "X1", "X2"], ODD_LABELS)
REDUCED_FORM = [("X1", "Z1", 1), ("X2", "Z2", 1)] + ODD_FORM


def reduced_base() -> QuadraticLieSuperalgebra:
    return QuadraticLieSuperalgebra.build(
        LieSuperalgebra(REDUCED_BASIS, {}, "q"), REDUCED_FORM
    )


def _block_derivation(even: Sequence[Sequence[ScalarLike]], odd) -> Superderivation:
    matrix = [[Fraction(0)] * 6 for _ in range(6)]
    for i in range(4):
        for j in range(4):
            matrix[i][j] = Fraction(even[i][j])
    for i in range(2):
        for j in range(2):
            matrix[4 + i][4 + j] = odd[i][j]
    return Superderivation(tuple(map(tuple, matrix)), 0)


def _six_two_block(lam: Fraction):
    return [[1, 0, 0, 0], [0, lam, 0, 0], [0, 0, -1, 0], [0, 0, 0, -lam]]


SIX_THREE_BLOCK = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, -1, -1]]

_EXTENSION_BLOCKS = {
    "g_8_2_3_s": lambda p: (_six_two_block(p["lambda"]), nilpotent()),
    "g_8_2_4_s": lambda p: (_six_two_block(p["lambda"]), diagonal(p["mu"])),
    "g_8_2_7_s": lambda p: (SIX_THREE_BLOCK, nilpotent()),
    "g_8_2_8_s": lambda p: (SIX_THREE_BLOCK, diagonal(p["lambda"])),
}


def extension_datum(key: str, params: Optional[Mapping[str, ScalarLike]] = None) -> ExtensionDatum:
    """Double extension datum (by X3, dual Z3) of the families built that way."""
    if key not in _EXTENSION_BLOCKS:
        raise InputError(f"{key} has no one-dimensional double extension description")
    resolved = entry(key).resolve(params)
    even, odd = _EXTENSION_BLOCKS[key](resolved)
    return one_dim_datum(reduced_base(), _block_derivation(even, odd), "X3", "Z3")


def reconstruct(key: str, params: Optional[Mapping[str, ScalarLike]] = None):
    # The double extension listed on the catalog basis Z1, Z2, Z3, X1, X2, X3, Y, T
    extended = double_extension(extension_datum(key, params), key)
    labels = list(SIX_BASIS.labels) + list(ODD_LABELS)
    log.debug("%s: reconstructed from its double extension datum", key)
    return extended.reorder(labels)


_ELEMENTARY = "elementary quadratic superalgebras"
_EIGHT = "8-dim solvable, 6-dim indecomposable even part"

register(CatalogEntry("g_4_1_s", "elementary g_4_1^s", _ELEMENTARY, g_4_1_s))
register(CatalogEntry("g_4_2_s", "elementary g_4_2^s", _ELEMENTARY, g_4_2_s))
register(CatalogEntry("g_6_s", "elementary g_6^s", _ELEMENTARY, g_6_s))
register(
    CatalogEntry(
        "g_8_2_1_s",
        "g_0 = g_6_1, diagonal odd action",
        _EIGHT,
        g_8_2_1_s,
        {"lambda": Fraction(1), "mu": Fraction(0), "nu": Fraction(0)},
        (
            Constraint(
                "lambda, mu, nu not all zero", lambda p: any((p["lambda"], p["mu"], p["nu"]))
            ),
        ),
    )
)
register(
    CatalogEntry(
        "g_8_2_2_s",
        "g_0 = g_6_1, nilpotent odd action",
        _EIGHT,
        g_8_2_2_s,
        {"lambda": Fraction(0), "mu": Fraction(0)},
    )
)
register(
    CatalogEntry(
        "g_8_2_3_s",
        "g_0 = g_6_2(lambda), ad X3 nilpotent on g_1",
        _EIGHT,
        g_8_2_3_s,
        {"lambda": Fraction(1)},
        (nonzero("lambda"),),
    )
)
register(
    CatalogEntry(
        "g_8_2_4_s",
        "g_0 = g_6_2(lambda), ad X3 = diag(mu, -mu) on g_1",
        _EIGHT,
        g_8_2_4_s,
        {"lambda": Fraction(1), "mu": Fraction(1)},
        (nonzero("lambda"), nonzero("mu")),
    )
)
register(
    CatalogEntry(
        "g_8_2_5_s",
        "g_0 = g_6_2(lambda), ad X3 = diag(1/2, -1/2), ad Z1 nilpotent",
        _EIGHT,
        g_8_2_5_s,
        {"lambda": Fraction(1)},
        (nonzero("lambda"),),
    )
)
register(
    CatalogEntry(
        "g_8_2_6_s",
        "g_0 = g_6_2(1), ad X3 = diag(1/2, -1/2), ad Z1, ad Z2 nilpotent",
        _EIGHT,
        g_8_2_6_s,
        {"lambda": Fraction(1), "mu": Fraction(1)},
        (equals("lambda", 1), nonzero("mu")),
    )
)
register(CatalogEntry("g_8_2_7_s", "g_0 = g_6_3, ad X3 nilpotent on g_1", _EIGHT, g_8_2_7_s))
register(
    CatalogEntry(
        "g_8_2_8_s",
        "g_0 = g_6_3, ad X3 = diag(lambda, -lambda) on g_1",
        _EIGHT,
        g_8_2_8_s,
        {"lambda": Fraction(1)},
        (nonzero("lambda"),),
    )
)
register(
    CatalogEntry(
        "g_8_2_9_s", "g_0 = g_6_3, ad X3 = diag(1/2, -1/2), ad Z2 nilpotent", _EIGHT, g_8_2_9_s
    )
)
register(
    CatalogEntry(
        "g_8_decomposable",
        "g_6_1, g_6_2(lambda) or g_6_3 (base = 1, 2, 3) plus an orthogonal odd plane",
        _EIGHT,
        g_8_decomposable,
        {"base": Fraction(1), "lambda": Fraction(1)},
        (
            Constraint("base in {1, 2, 3}", lambda p: p["base"] in (1, 2, 3)),
            Constraint("lambda != 0 when base = 2", lambda p: p["base"] != 2 or p["lambda"] != 0),
        ),
    )
)
