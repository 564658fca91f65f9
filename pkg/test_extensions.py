# Tests for superderivations and double extensions

from fractions import Fraction

import pytest

from quadratic_superalgebras import catalog
from quadratic_superalgebras.core import GradedBasis, InputError, LieSuperalgebra
from quadratic_superalgebras.core.linalg import identity
from quadratic_superalgebras.core.sampling import random_rational
from quadratic_superalgebras.extensions import (
    ExtensionDatum,
    Superderivation,
    as_superderivation,
    double_extension,
    in_span,
    inner_derivation,
    is_superderivation,
    lie_bracket_of_derivations,
    one_dim_double_extension,
    random_extension_datum,
    skew_superderivation_space,
    validate_extension_datum,
    validate_skew_superderivation,
)
from quadratic_superalgebras.quadratic import validate_quadratic

# diag(2, -2, -1, 1) on X0, Y0, X1, Y1
G41_DERIVATION = as_superderivation(
    [[2, 0, 0, 0], [0, -2, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]], 0
)


def vec(q, **terms):
    coords = [Fraction(0)] * q.dim
    for label, coeff in terms.items():
        coords[q.basis.index(label)] = Fraction(coeff)
    return tuple(coords)


@pytest.mark.parametrize("p, q", [(2, 2), (3, 4), (1, 2), (4, 0)])
def test_skew_derivations_of_abelian_algebras(p, q):
    algebra = catalog.build("abelian", {"p": p, "q": q})
    n = q // 2
    assert len(skew_superderivation_space(algebra, 0)) == p * (p - 1) // 2 + n * (2 * n + 1)
    assert len(skew_superderivation_space(algebra, 1)) == p * q


def test_skew_derivation_space_elements_validate(elementary):
    for degree in (0, 1):
        for d in skew_superderivation_space(elementary, degree):
            assert validate_skew_superderivation(elementary, d).ok


def test_known_skew_derivation_of_g41(g41):
    assert validate_skew_superderivation(g41, G41_DERIVATION).ok
    assert in_span(G41_DERIVATION, skew_superderivation_space(g41, 0))


def test_inner_derivations_are_skew(elementary):
    g = elementary.algebra
    for i in range(g.dim):
        d = inner_derivation(g, g.vector(i))
        assert d.degree == g.parity(i)
        assert validate_skew_superderivation(elementary, d).ok
        assert in_span(d, skew_superderivation_space(elementary, d.degree))


def test_identity_is_not_a_derivation(g41):
    report = is_superderivation(g41.algebra, identity(4), 0)
    assert report.axioms() == ("superderivation",)


def test_odd_derivation_with_even_image_is_flagged(g41):
    # an odd derivation must swap parities
    report = is_superderivation(g41.algebra, G41_DERIVATION.matrix, 1)
    assert "degree" in report.axioms()


def test_bracket_of_skew_derivations(g6s, rng):
    spaces = {degree: skew_superderivation_space(g6s, degree) for degree in (0, 1)}

    def random_element(degree):
        d = Superderivation.zero(g6s.dim, degree)
        for basis_derivation in spaces[degree]:
            d = d + random_rational(rng, 3) * basis_derivation
        return d

    for _ in range(10):
        for a in (0, 1):
            for b in (0, 1):
                bracket = lie_bracket_of_derivations(random_element(a), random_element(b))
                assert bracket.degree == (a + b) % 2
                assert validate_skew_superderivation(g6s, bracket).ok


def test_one_dimensional_double_extension_of_g41(g41):
    q = one_dim_double_extension(g41, G41_DERIVATION, name="g41_ext")
    assert q.basis.labels == ("e", "X0", "Y0", "f", "X1", "Y1")
    assert validate_quadratic(q, with_algebra=True).ok
    g = q.algebra
    # [e, X] = DX, [X, Y] = [X, Y]_g + B(DX, Y) f, B(e, f) = 1
    assert g.bracket(vec(q, e=1), vec(q, X1=1)) == vec(q, X1=-1)
    assert g.bracket(vec(q, X0=1), vec(q, Y0=1)) == vec(q, f=2)
    assert g.bracket(vec(q, Y0=1), vec(q, Y1=1)) == vec(q, X1=-2)
    assert q.B(vec(q, e=1), vec(q, f=1)) == 1


def test_one_dimensional_extension_rejects_bad_derivations(g41):
    with pytest.raises(InputError):
        one_dim_double_extension(g41, as_superderivation(identity(4), 0))
    with pytest.raises(InputError):
        one_dim_double_extension(g41, Superderivation.zero(4, 1))


@pytest.mark.parametrize("key", ["g_4_1_s", "g_4_2_s", "g_6_s", "g_6_1", "abelian"])
def test_random_double_extensions_are_quadratic(key, rng, config):
    base = catalog.build(key)
    for sample in range(config.sampling.extension_samples):
        datum = random_extension_datum(base, rng, h_dim=1 + sample % 2)
        assert validate_extension_datum(datum).ok
        extended = double_extension(datum)
        assert extended.dim == base.dim + 2 * datum.h.dim
        report = validate_quadratic(extended, with_algebra=True)
        assert report.ok, list(report.lines())


def test_double_extension_by_a_nonabelian_algebra(g41):
    # h = span{a, b} with [a, b] = b; psi(a) = D, psi(b) = 0
    h = LieSuperalgebra.from_brackets(GradedBasis.of(["a", "b"]), [("a", "b", {"b": 1})], "h")
    datum = ExtensionDatum(g41, h, {"a": G41_DERIVATION}, None, ("a*", "b*"))
    extended = double_extension(datum, "nonabelian")
    assert extended.basis.labels == ("a", "b", "X0", "Y0", "a*", "b*", "X1", "Y1")
    assert validate_quadratic(extended, with_algebra=True).ok
    g = extended.algebra
    # h acts on h* by the coadjoint action
    assert g.bracket(vec(extended, a=1), vec(extended, **{"b*": 1})) == vec(
        extended, **{"b*": -1}
    )


def test_invalid_datum_names_its_axiom(g41):
    h = LieSuperalgebra.from_brackets(GradedBasis.of(["a", "b"]), [("a", "b", {"b": 1})], "h")
    datum = ExtensionDatum(g41, h, {"a": G41_DERIVATION, "b": G41_DERIVATION})
    report = validate_extension_datum(datum)
    assert report.axioms() == ("psi morphism",)
    with pytest.raises(InputError):
        double_extension(datum)


def test_datum_with_unknown_label_or_bad_derivation(g41):
    h = LieSuperalgebra(GradedBasis.of(["a"]), {}, "h")
    unknown = ExtensionDatum(g41, h, {"z": G41_DERIVATION})
    assert "psi domain" in validate_extension_datum(unknown).axioms()
    not_skew = ExtensionDatum(g41, h, {"a": as_superderivation(identity(4), 0)})
    axioms = validate_extension_datum(not_skew).axioms()
    assert "psi superderivation" in axioms
    assert "psi skew-supersymmetry" in axioms
    with pytest.raises(InputError):
        double_extension(not_skew)


def test_dual_labels_must_not_clash(g41):
    h = LieSuperalgebra(GradedBasis.of(["a"]), {}, "h")
    clash = ExtensionDatum(g41, h, {"a": G41_DERIVATION}, None, ("X0",))
    assert validate_extension_datum(clash).axioms() == ("dual labels",)
    fresh = ExtensionDatum(g41, h, {"a": G41_DERIVATION}, None, ("a*",))
    assert validate_extension_datum(fresh).ok


def test_double_extension_by_an_odd_line(g41):
    # ad(Y1) is odd and squares to zero, so it is the image of an odd line
    ad_y1 = inner_derivation(g41.algebra, vec(g41, Y1=1))
    assert ad_y1.degree == 1
    h = LieSuperalgebra(GradedBasis.of([], ["E"]), {}, "h")
    extended = double_extension(ExtensionDatum(g41, h, {"E": ad_y1}, None, ("E*",)))
    assert extended.basis.labels == ("X0", "Y0", "E", "X1", "Y1", "E*")
    assert validate_quadratic(extended, with_algebra=True).ok
    g = extended.algebra
    assert g.bracket(vec(extended, E=1), vec(extended, Y0=1)) == vec(extended, X1=2)


def test_double_extension_by_a_mixed_algebra(g41):
    # h = span{a | E} with [a, E] = E; psi(a) = D, psi(E) = ad(Y1) and [D, ad(Y1)] = ad(Y1)
    ad_y1 = inner_derivation(g41.algebra, vec(g41, Y1=1))
    assert lie_bracket_of_derivations(G41_DERIVATION, ad_y1) == ad_y1
    h = LieSuperalgebra.from_brackets(GradedBasis.of(["a"], ["E"]), [("a", "E", {"E": 1})], "h")
    datum = ExtensionDatum(g41, h, {"a": G41_DERIVATION, "E": ad_y1}, None, ("a*", "E*"))
    assert validate_extension_datum(datum).ok
    extended = double_extension(datum, "mixed")
    assert extended.basis.labels == ("a", "X0", "Y0", "a*", "E", "X1", "Y1", "E*")
    assert validate_quadratic(extended, with_algebra=True).ok
    g = extended.algebra
    assert g.bracket(vec(extended, a=1), vec(extended, E=1)) == vec(extended, E=1)
    assert g.bracket(vec(extended, E=1), vec(extended, Y1=1)) == vec(extended, X0=-2)


def test_odd_line_needs_a_square_zero_derivation(g41):
    h = LieSuperalgebra(GradedBasis.of([], ["H"]), {}, "h")
    even = ExtensionDatum(g41, h, {"H": G41_DERIVATION}, None, ("H*",))
    assert "psi degree" in validate_extension_datum(even).axioms()
    # on abelian(2, 2): E1 -> O1, E2 -> O2, O1 -> E2, O2 -> -E1, so D^2 E1 = E2
    base = catalog.build("abelian", {"p": 2, "q": 2})
    d = as_superderivation([[0, 0, 0, -1], [0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0]], 1)
    assert validate_skew_superderivation(base, d).ok
    squared = ExtensionDatum(base, h, {"H": d}, None, ("H*",))
    assert validate_extension_datum(squared).axioms() == ("psi morphism",)
    with pytest.raises(InputError):
        double_extension(squared)


@pytest.mark.parametrize(
    "key, params",
    [
        ("g_8_2_3_s", {"lambda": 2}),
        ("g_8_2_4_s", {"lambda": -1, "mu": "1/2"}),
        ("g_8_2_7_s", {}),
        ("g_8_2_8_s", {"lambda": 3}),
    ],
)
def test_extending_maps_are_skew_derivations(key, params):
    datum = catalog.extension_datum(key, params)
    derivation = datum.psi["X3"]
    assert validate_skew_superderivation(datum.base, derivation).ok
    assert in_span(derivation, skew_superderivation_space(datum.base, 0))


@pytest.mark.parametrize(
    "key, bindings",
    [
        ("g_8_2_3_s", [{"lambda": 1}, {"lambda": -2}, {"lambda": "1/3"}]),
        (
            "g_8_2_4_s",
            [{"lambda": 1, "mu": 1}, {"lambda": 2, "mu": "-1/2"}, {"lambda": -3, "mu": 5}],
        ),
        ("g_8_2_7_s", [{}]),
        ("g_8_2_8_s", [{"lambda": 1}, {"lambda": "1/2"}, {"lambda": -4}]),
    ],
)
def test_extension_data_rebuild_the_catalog(key, bindings):
    for params in bindings:
        rebuilt = catalog.reconstruct(key, params)
        listed = catalog.build(key, params)
        assert rebuilt.basis == listed.basis
        assert rebuilt.algebra.constants == listed.algebra.constants
        assert rebuilt.form.gram == listed.form.gram


def test_extension_datum_of_other_families():
    with pytest.raises(InputError):
        catalog.extension_datum("g_8_2_5_s")
