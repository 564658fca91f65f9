# Heisenberg superalgebras, abelian algebras and the indecomposable 6-dimensional quadratic
# solvable Lie algebras on the basis Z1, Z2, Z3, X1, X2, X3 with B(X_i, Z_j) = delta_ij

from fractions import Fraction

from ..core.algebra import GradedBasis, LieSuperalgebra
from ..core.errors import InputError
from ..quadratic.form import QuadraticLieSuperalgebra
from .registry import CatalogEntry, integer_at_least, nonzero, register

SIX_BASIS = GradedBasis.of(["Z1", "Z2", "Z3", "X1", "X2", "X3"])
SIX_FORM = [("X1", "Z1", 1), ("X2", "Z2", 1), ("X3", "Z3", 1)]


def _count(value: Fraction, name: str) -> int:
    if value.denominator != 1 or value < 0:
        raise InputError(f"{name} must be a non-negative integer, got {value}")
    return int(value)


def heisenberg(n: Fraction, m: Fraction) -> LieSuperalgebra:
    """h_{2n+1,m}: [X_i, X_{n+i}] = Z and [Y_j, Y_j] = Z. It carries no invariant form."""
    n, m = _count(n, "n"), _count(m, "m")
    basis = GradedBasis.of(
        ["Z"] + [f"X{i + 1}" for i in range(2 * n)], [f"Y{j + 1}" for j in range(m)]
    )
    brackets = [(f"X{i + 1}", f"X{n + i + 1}", {"Z": 1}) for i in range(n)]
    brackets += [(f"Y{j + 1}", f"Y{j + 1}", {"Z": 1}) for j in range(m)]
    return LieSuperalgebra.from_brackets(basis, brackets, f"h_{2 * n + 1}_{m}")


def abelian(p: Fraction, q: Fraction) -> QuadraticLieSuperalgebra:
    # B(E_i, E_i) = 1 and B(O_{2k-1}, O_{2k}) = 1
    p, q = _count(p, "p"), _count(q, "q")
    basis = GradedBasis.of([f"E{i + 1}" for i in range(p)], [f"O{j + 1}" for j in range(q)])
    algebra = LieSuperalgebra(basis, {}, f"abelian_{p}_{q}")
    pairs = [(f"E{i + 1}", f"E{i + 1}", 1) for i in range(p)]
    pairs += [(f"O{2 * k + 1}", f"O{2 * k + 2}", 1) for k in range(q // 2)]
    return QuadraticLieSuperalgebra.build(algebra, pairs)


def g_6_1() -> QuadraticLieSuperalgebra:
    brackets = [("X1", "X2", {"Z3": 1}), ("X2", "X3", {"Z1": 1}), ("X3", "X1", {"Z2": 1})]
    return QuadraticLieSuperalgebra.build(
        LieSuperalgebra.from_brackets(SIX_BASIS, brackets, "g_6_1"), SIX_FORM
    )


def g_6_2(lam: Fraction) -> QuadraticLieSuperalgebra:
    brackets = [
        ("X3", "Z1", {"Z1": 1}),
        ("X3", "Z2", {"Z2": lam}),
        ("X3", "X1", {"X1": -1}),
        ("X3", "X2", {"X2": -lam}),
        ("Z1", "X1", {"Z3": 1}),
        ("Z2", "X2", {"Z3": lam}),
    ]
    return QuadraticLieSuperalgebra.build(
        LieSuperalgebra.from_brackets(SIX_BASIS, brackets, "g_6_2"), SIX_FORM
    )


def g_6_3() -> QuadraticLieSuperalgebra:
    brackets = [
        ("X3", "Z1", {"Z1": 1}),
        ("X3", "Z2", {"Z1": 1, "Z2": 1}),
        ("X3", "X1", {"X1": -1, "X2": -1}),
        ("X3", "X2", {"X2": -1}),
        ("Z1", "X1", {"Z3": 1}),
        ("Z2", "X1", {"Z3": 1}),
        ("Z2", "X2", {"Z3": 1}),
    ]
    return QuadraticLieSuperalgebra.build(
        LieSuperalgebra.from_brackets(SIX_BASIS, brackets, "g_6_3"), SIX_FORM
    )


def six_dimensional(base: int, lam: Fraction = Fraction(1)) -> QuadraticLieSuperalgebra:
    if base == 1:
        return g_6_1()
    if base == 2:
        return g_6_2(lam)
    if base == 3:
        return g_6_3()
    raise InputError(f"no six-dimensional base number {base}")


def g_6_2_i_isomorphic(first: Fraction, second: Fraction) -> bool:
    # g_6_2(l1) and g_6_2(l2) are i-isomorphic iff l2 = +-l1 or l2 = 1/l1
    if not first or not second:
        raise InputError("g_6_2 needs a nonzero parameter")
    return second in (first, -first, 1 / first)


register(
    CatalogEntry(
        "heisenberg",
        "Heisenberg Lie superalgebra h_{2n+1,m}",
        "Heisenberg family",
        heisenberg,
        {"n": Fraction(1), "m": Fraction(1)},
        (integer_at_least("n"), integer_at_least("m")),
        quadratic=False,
    )
)
register(
    CatalogEntry(
        "abelian",
        "abelian superalgebra with a split form",
        "abelian quadratic superalgebras",
        abelian,
        {"p": Fraction(2), "q": Fraction(2)},
        (integer_at_least("p"), integer_at_least("q", even=True)),
    )
)
register(CatalogEntry("g_6_1", "6-dim quadratic Lie algebra g_6_1", "six-dimensional list", g_6_1))
register(
    CatalogEntry(
        "g_6_2",
        "6-dim quadratic Lie algebra g_6_2(lambda)",
        "six-dimensional list",
        g_6_2,
        {"lambda": Fraction(1)},
        (nonzero("lambda"),),
    )
)
register(CatalogEntry("g_6_3", "6-dim quadratic Lie algebra g_6_3", "six-dimensional list", g_6_3))
