# Tests for invariant forms, Darboux frames and orthogonals of graded ideals

from fractions import Fraction

import pytest

from quadratic_superalgebras import catalog
from quadratic_superalgebras.core import (
    DegenerateFormError,
    GradedBasis,
    InputError,
    LieSuperalgebra,
    Subspace,
    is_ideal,
)
from quadratic_superalgebras.quadratic import (
    BilinearForm,
    QuadraticLieSuperalgebra,
    darboux_frame,
    find_nondegenerate_central_line,
    orthogonal_complement,
    orthogonal_direct_sum,
    random_graded_change_of_basis,
    solve_odd_brackets_by_invariance,
    validate_form,
    validate_quadratic,
)


def vec(q, **terms):
    coords = [Fraction(0)] * q.dim
    for label, coeff in terms.items():
        coords[q.basis.index(label)] = Fraction(coeff)
    return tuple(coords)


def span(q, *labels):
    return Subspace.span([q.algebra.vector(label) for label in labels], q.dim)


def test_elementary_algebras_are_quadratic(elementary):
    report = validate_quadratic(elementary, with_algebra=True)
    assert report.ok, list(report.lines())


def test_supersymmetric_fill_in(g41):
    # only B(X1, Y1) is given; B(Y1, X1) = -1 follows for odd vectors
    assert g41.B(vec(g41, Y1=1), vec(g41, X1=1)) == -1
    assert g41.B(vec(g41, Y0=1), vec(g41, X0=1)) == 1


def test_form_that_is_not_invariant(g41):
    q = g41.with_form([("X0", "Y0", 1), ("X1", "Y1", 2)])
    report = validate_form(q)
    assert report.axioms() == ("invariance",)
    assert {"Y0", "Y1"} <= set(report.violations[0].witness)


def test_degenerate_form(g42):
    q = g42.with_form([("X0", "Y0", 1)])
    report = validate_form(q)
    assert "non-degeneracy" in report.axioms()


def test_odd_even_pairing_breaks_evenness(g41):
    q = g41.with_form([("X0", "Y0", 1), ("X1", "Y1", 1), ("X0", "X1", 1)])
    assert "evenness" in validate_form(q).axioms()


def test_non_supersymmetric_gram(g41):
    gram = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    q = QuadraticLieSuperalgebra(g41.algebra, BilinearForm(g41.basis, gram))
    assert "supersymmetry" in validate_form(q).axioms()


def test_form_on_another_basis_is_rejected(g41, g42):
    with pytest.raises(InputError):
        QuadraticLieSuperalgebra(g41.algebra, BilinearForm.zero(GradedBasis.of(["A"])))


def test_darboux_frame_is_symplectic(g6s):
    frame = darboux_frame(g6s)
    assert frame.n == 2
    for k in range(frame.n):
        for m in range(frame.n):
            assert g6s.B(frame.odd_x(k), frame.odd_y(m)) == (1 if k == m else 0)
            assert g6s.B(frame.odd_x(k), frame.odd_x(m)) == 0
            assert g6s.B(frame.odd_y(k), frame.odd_y(m)) == 0


def test_darboux_even_dual_frame(g6s):
    frame = darboux_frame(g6s)
    # B(Y^i, e_j) = delta_ij for the even basis e_j
    for i in range(g6s.basis.even_dim):
        for j in range(g6s.basis.even_dim):
            assert g6s.B(frame.even_dual(i), g6s.algebra.vector(j)) == (1 if i == j else 0)


def test_odd_dimensional_odd_part_has_no_frame():
    basis = GradedBasis.of(["A"], ["O"])
    q = QuadraticLieSuperalgebra.build(LieSuperalgebra(basis, {}, "odd_line"), [("A", "A", 1)])
    with pytest.raises(DegenerateFormError):
        darboux_frame(q)


def test_degenerate_odd_block_has_no_frame():
    basis = GradedBasis.of([], ["O1", "O2"])
    q = QuadraticLieSuperalgebra(LieSuperalgebra(basis, {}, "flat"), BilinearForm.zero(basis))
    with pytest.raises(DegenerateFormError):
        darboux_frame(q)


def test_orthogonal_of_a_nondegenerate_ideal():
    q = catalog.build("g_8_decomposable", {"base": 1, "lambda": 1})
    even = span(q, "Z1", "Z2", "Z3", "X1", "X2", "X3")
    complement = orthogonal_complement(q, even)
    assert complement == span(q, "Y", "T")


def test_orthogonal_of_a_degenerate_central_ideal(g42):
    complement = orthogonal_complement(g42, span(g42, "X0"))
    assert complement == span(g42, "X0", "X1", "Y1")


def test_orthogonal_of_the_center_of_g_6_2():
    q = catalog.build("g_6_2", {"lambda": 1})
    complement = orthogonal_complement(q, span(q, "Z3"))
    assert complement == span(q, "Z1", "Z2", "Z3", "X1", "X2")
    assert is_ideal(q.algebra, complement)
    # X3 pairs with Z3 and acts on every other basis vector of the complement
    g = q.algebra
    assert not complement.contains(g.vector("X3"))
    for label in ("Z1", "Z2", "X1", "X2"):
        image = g.bracket(g.vector("X3"), g.vector(label))
        assert any(image) and complement.contains(image)
    assert orthogonal_complement(q, Subspace.whole(q.dim)).is_zero()


def test_orthogonal_needs_an_ideal(g42):
    with pytest.raises(InputError):
        orthogonal_complement(g42, span(g42, "Y0"))


def test_nondegenerate_central_line():
    q = catalog.build("abelian", {"p": 2, "q": 2})
    line = find_nondegenerate_central_line(q)
    assert line is not None and line.dim == 1
    assert q.B(line.rows[0], line.rows[0]) != 0


def test_no_nondegenerate_central_line(g41):
    assert find_nondegenerate_central_line(g41) is None
    assert find_nondegenerate_central_line(catalog.build("g_6_1")) is None


def test_orthogonal_direct_sum(g42):
    line = catalog.build("abelian", {"p": 1, "q": 0})
    total = orthogonal_direct_sum(g42, line)
    assert total.basis.labels == ("X0", "Y0", "E1", "X1", "Y1")
    assert validate_quadratic(total, with_algebra=True).ok
    assert find_nondegenerate_central_line(total) == span(total, "E1")


def test_random_graded_change_of_basis_stays_quadratic(elementary, rng):
    for _ in range(5):
        q = random_graded_change_of_basis(elementary, rng)
        assert validate_quadratic(q, with_algebra=True).ok


def test_odd_module_needs_an_even_base(g41):
    with pytest.raises(InputError):
        solve_odd_brackets_by_invariance(g41, ("Y", "T"), [("Y", "T", 1)], {})
