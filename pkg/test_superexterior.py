# Tests for cochains: wedge, contraction, evaluation, the differential and the Poisson bracket

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quadratic_superalgebras import catalog
from quadratic_superalgebras.core import InputError
from quadratic_superalgebras.core.scalars import sign
from quadratic_superalgebras.exterior import (
    Cochain,
    associated_three_form,
    bidegree_basis,
    cochain_dimension,
    cochain_from_values,
    contract,
    differential_direct,
    differential_via_poisson,
    evaluate,
    evaluate_indices,
    monomial_basis,
    poisson_bracket,
    poisson_bracket_product_form,
    power,
    random_cochain,
    random_homogeneous_cochain,
    wedge,
)
from quadratic_superalgebras.quadratic import darboux_frame

# bidegrees (even degree, odd degree) used by the property suites
SMALL_BIDEGREES = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (2, 1), (1, 2), (0, 3)]
QUADRATIC_KEYS = [entry.key for entry in catalog.list_entries() if entry.quadratic]

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=5)


def gen(q, label):
    return Cochain.generator(q.basis, label)


def terms(q, *specs):
    return Cochain.from_terms(q.basis, specs)


def bidegree(cochain):
    [(degree, parity)] = cochain.bidegrees()
    return degree, parity


def test_wedge_signs(g41):
    x, y = gen(g41, "X0"), gen(g41, "Y0")
    p, q = gen(g41, "X1"), gen(g41, "Y1")
    assert wedge(x, x).is_zero()
    assert wedge(x, y) == -wedge(y, x)
    # odd generators commute and square to nonzero symmetric monomials
    assert wedge(p, q) == wedge(q, p)
    assert wedge(q, q) == terms(g41, ([], ["Y1", "Y1"], 1))
    assert power(q, 3) == terms(g41, ([], ["Y1", "Y1", "Y1"], 1))
    # (Ω ⊗ F) ∧ (Ω' ⊗ F') picks up (-1)^{f ω'}
    assert wedge(q, x) == -terms(g41, (["X0"], ["Y1"], 1))
    assert wedge(x, q) == terms(g41, (["X0"], ["Y1"], 1))


def test_from_terms_orders_even_factors(g41):
    assert terms(g41, (["Y0", "X0"], [], 1)) == -terms(g41, (["X0", "Y0"], [], 1))
    assert terms(g41, (["X0", "X0"], [], 1)).is_zero()
    with pytest.raises(InputError):
        terms(g41, (["X1"], [], 1))


def test_cochains_over_different_bases(g41, g6s):
    with pytest.raises(InputError):
        gen(g41, "X0") + gen(g6s, "X0")


def test_evaluation_weights(g41):
    q2 = terms(g41, ([], ["Y1", "Y1"], 1))
    assert evaluate(q2, ["Y1", "Y1"]) == 2
    xy = terms(g41, (["X0", "Y0"], [], 1))
    assert evaluate(xy, ["X0", "Y0"]) == 1
    assert evaluate(xy, ["Y0", "X0"]) == -1
    mixed = terms(g41, (["Y0"], ["X1"], 1))
    # moving an odd vector past an even one changes the sign
    assert evaluate(mixed, ["Y0", "X1"]) == 1
    assert evaluate(mixed, ["X1", "Y0"]) == -1
    # and two odd vectors commute
    pq = terms(g41, ([], ["X1", "Y1"], 1))
    assert evaluate(pq, ["X1", "Y1"]) == evaluate(pq, ["Y1", "X1"]) == 1


def test_evaluation_is_multilinear(g41):
    q2 = terms(g41, ([], ["Y1", "Y1"], 1))
    v = (0, 0, 2, 3)
    # (2 X1 + 3 Y1)^2 only sees the Y1 Y1 component: 9 * 2
    assert evaluate(q2, [v, v]) == 18


def test_contraction(g41):
    xy = terms(g41, (["X0", "Y0"], [], 1))
    assert contract(g41, "X0", xy) == gen(g41, "Y0")
    assert contract(g41, "Y0", xy) == -gen(g41, "X0")
    q2 = terms(g41, ([], ["Y1", "Y1"], 1))
    assert contract(g41, "Y1", q2) == 2 * gen(g41, "Y1")
    mixed = terms(g41, (["Y0"], ["Y1"], 1))
    # i_f(Ω ⊗ F) = (-1)^ω Ω ⊗ ∂F
    assert contract(g41, "Y1", mixed) == -gen(g41, "Y0")
    assert contract(g41, (0, 1, 0, 1), mixed) == gen(g41, "Y1") - gen(g41, "Y0")


def test_contraction_matches_evaluation(g6s, rng):
    for even, odd in SMALL_BIDEGREES:
        a = random_homogeneous_cochain(g6s.basis, rng, even, odd)
        degree = even + odd
        for monomial in monomial_basis(g6s.basis, degree - 1):
            for k in range(g6s.dim):
                args = (k,) + monomial.indices()
                assert evaluate_indices(contract(g6s, k, a), monomial.indices()) == (
                    evaluate_indices(a, args)
                )


@st.composite
def homogeneous_cochains(draw, basis):
    # (cochain, total degree, parity) in a random bidegree
    even, odd = draw(st.sampled_from(SMALL_BIDEGREES))
    monomials = bidegree_basis(basis, even, odd)
    if not monomials:
        return Cochain.zero(basis), even + odd, odd % 2
    chosen = draw(st.lists(st.sampled_from(monomials), min_size=1, max_size=3, unique=True))
    return Cochain(basis, {m: draw(coefficients) for m in chosen}), even + odd, odd % 2


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["g_4_1_s", "g_6_s", "g_8_2_5_s"]), st.data())
def test_contraction_is_a_superderivation(key, data):
    # i_X(A ∧ B) = i_X A ∧ B + (-1)^{a + x b} A ∧ i_X B, a the degree and b the parity of A
    q = catalog.build(key)
    a, degree, parity = data.draw(homogeneous_cochains(q.basis))
    b, _, _ = data.draw(homogeneous_cochains(q.basis))
    k = data.draw(st.integers(0, q.dim - 1))
    s = sign(degree + q.basis.parity[k] * parity)
    assert contract(q, k, wedge(a, b)) == (
        wedge(contract(q, k, a), b) + s * wedge(a, contract(q, k, b))
    )


def test_dual_pairing_round_trip(g6s, rng):
    for degree in range(4):
        a = random_cochain(g6s.basis, rng, degree, terms=5)
        again = cochain_from_values(g6s.basis, degree, lambda idx: evaluate_indices(a, idx))
        assert again == a


def test_cochain_dimensions(g41, g6s):
    assert cochain_dimension(g41.basis, 2) == 8
    assert cochain_dimension(g6s.basis, 2) == 19
    assert len(monomial_basis(g6s.basis, 2)) == 19


def test_three_forms(g41, g42):
    # I(X, Y, Z) = B([X, Y], Z)
    assert associated_three_form(g41) == terms(g41, (["Y0"], ["Y1", "Y1"], -1))
    assert associated_three_form(g42) == terms(g42, (["Y0"], ["X1", "Y1"], 1))
    assert associated_three_form(catalog.build("abelian")).is_zero()


def test_three_form_values(g6s):
    three_form = associated_three_form(g6s)
    g = g6s.algebra
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                expected = g6s.B(g.bracket(g.vector(i), g.vector(j)), g.vector(k))
                assert evaluate_indices(three_form, (i, j, k)) == expected


def test_differential_on_generators_of_g41(g41):
    # x = X0, y = Y0, p = X1, q = Y1
    assert differential_direct(g41.algebra, gen(g41, "X0")) == terms(g41, ([], ["Y1", "Y1"], 1))
    assert differential_direct(g41.algebra, gen(g41, "X1")) == terms(g41, (["Y0"], ["Y1"], 2))
    assert differential_direct(g41.algebra, gen(g41, "Y0")).is_zero()
    assert differential_direct(g41.algebra, gen(g41, "Y1")).is_zero()


# delta of every degree 1 and 2 monomial of g_4_1_s, as (even, odd) keys -> value terms
G41_DIFFERENTIALS = [
    ((["X0"], []), [([], ["Y1", "Y1"], 1)]),
    ((["Y0"], []), []),
    (([], ["X1"]), [(["Y0"], ["Y1"], 2)]),
    (([], ["Y1"]), []),
    ((["X0", "Y0"], []), [(["Y0"], ["Y1", "Y1"], 1)]),
    ((["X0"], ["X1"]), [([], ["X1", "Y1", "Y1"], 1), (["X0", "Y0"], ["Y1"], -2)]),
    ((["X0"], ["Y1"]), [([], ["Y1", "Y1", "Y1"], 1)]),
    ((["Y0"], ["X1"]), []),
    ((["Y0"], ["Y1"]), []),
    (([], ["X1", "X1"]), [(["Y0"], ["X1", "Y1"], 4)]),
    (([], ["Y1", "Y1"]), []),
    (([], ["X1", "Y1"]), [(["Y0"], ["Y1", "Y1"], 2)]),
]


def test_differential_table_of_g41(g41):
    three_form = associated_three_form(g41)
    for (even, odd), value in G41_DIFFERENTIALS:
        a = terms(g41, (even, odd, 1))
        expected = terms(g41, *value)
        assert differential_direct(g41.algebra, a) == expected
        assert differential_via_poisson(g41, a) == expected
        assert poisson_bracket(g41, None, three_form, a) == -expected


def test_differential_of_g42(g42):
    assert differential_direct(g42.algebra, gen(g42, "X0")) == terms(g42, ([], ["X1", "Y1"], -1))


def test_heisenberg_differential_of_the_center():
    h = catalog.build("heisenberg", {"n": 2, "m": 1})
    dz = differential_direct(h, Cochain.generator(h.basis, "Z"))
    expected = Cochain.from_terms(
        h.basis,
        [(["X1", "X3"], [], -1), (["X2", "X4"], [], -1), ([], ["Y1", "Y1"], Fraction(-1, 2))],
    )
    assert dz == expected


def test_abelian_differential_vanishes(rng):
    q = catalog.build("abelian", {"p": 2, "q": 2})
    for degree in range(1, 4):
        a = random_cochain(q.basis, rng, degree)
        assert differential_via_poisson(q, a).is_zero()
        assert differential_direct(q.algebra, a).is_zero()


def test_three_form_is_poisson_closed(elementary):
    three_form = associated_three_form(elementary)
    assert poisson_bracket(elementary, None, three_form, three_form).is_zero()


def test_differential_squares_to_zero(elementary, rng):
    for degree in range(1, 4):
        a = random_cochain(elementary.basis, rng, degree, terms=6)
        da = differential_direct(elementary.algebra, a)
        assert differential_direct(elementary.algebra, da).is_zero()


@pytest.mark.parametrize("key", QUADRATIC_KEYS)
def test_poisson_differential_on_every_generator(key):
    q = catalog.build(key)
    frame = darboux_frame(q)
    three_form = associated_three_form(q)
    for degree in range(1, 4):
        for monomial in monomial_basis(q.basis, degree):
            a = Cochain(q.basis, {monomial: Fraction(1)})
            via_poisson = differential_via_poisson(q, a, frame, three_form)
            assert via_poisson == differential_direct(q.algebra, a)


def test_poisson_on_random_cochains_of_g6s(g6s, rng):
    for even, odd in SMALL_BIDEGREES + [(2, 2), (1, 3), (0, 4)]:
        a = random_homogeneous_cochain(g6s.basis, rng, even, odd, terms=4)
        assert differential_via_poisson(g6s, a) == differential_direct(g6s.algebra, a)


def test_product_form_agrees_with_frame_formula(elementary, rng):
    for _ in range(40):
        left = random_homogeneous_cochain(elementary.basis, rng, *_pick(rng))
        right = random_homogeneous_cochain(elementary.basis, rng, *_pick(rng))
        assert poisson_bracket(elementary, None, left, right) == (
            poisson_bracket_product_form(elementary, None, left, right)
        )


def _pick(rng):
    return SMALL_BIDEGREES[int(rng.integers(0, len(SMALL_BIDEGREES)))]


def _random_triple(q, rng):
    triple = []
    while len(triple) < 3:
        a = random_homogeneous_cochain(q.basis, rng, *_pick(rng))
        if not a.is_zero():
            triple.append(a)
    return triple


@pytest.mark.parametrize("key", QUADRATIC_KEYS)
def test_graded_lie_identities(key, rng, config):
    q = catalog.build(key)
    frame = darboux_frame(q)

    def bracket(u, v):
        return poisson_bracket(q, frame, u, v)

    for _ in range(config.sampling.property_samples):
        a, b, c = _random_triple(q, rng)
        (da, pa), (db, pb) = bidegree(a), bidegree(b)
        s = sign(da * db + pa * pb)
        # antisymmetry
        assert bracket(b, a) == -s * bracket(a, b)
        # Jacobi
        assert bracket(bracket(a, b), c) == bracket(a, bracket(b, c)) - s * bracket(
            b, bracket(a, c)
        )
        # Leibniz
        assert bracket(a, wedge(b, c)) == wedge(bracket(a, b), c) + s * wedge(b, bracket(a, c))
