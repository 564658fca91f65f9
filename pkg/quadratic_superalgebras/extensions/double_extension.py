# Double extensions of quadratic Lie superalgebras by a Lie superalgebra h

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.algebra import GradedBasis, LieSuperalgebra, validate_algebra
from ..core.errors import EngineError, InputError
from ..core.reports import ValidationReport, Violation
from ..core.sampling import random_rational
from ..core.scalars import sign
from ..quadratic.form import BilinearForm, QuadraticLieSuperalgebra, validate_form
from .derivations import (
    Superderivation,
    is_superderivation,
    is_skew_supersymmetric,
    lie_bracket_of_derivations,
    skew_superderivation_space,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionDatum:
    """Data (h, gamma, psi) for extending the quadratic algebra `base`.

    psi maps each basis label of h to a skew-supersymmetric superderivation of the base whose
    degree is the parity of that basis vector; gamma is an invariant form on h (zero allowed).
    """

    base: QuadraticLieSuperalgebra
    h: LieSuperalgebra
    psi: Dict[str, Superderivation]
    gamma: Optional[BilinearForm] = None
    dual_labels: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def gamma_form(self) -> BilinearForm:
        return self.gamma if self.gamma is not None else BilinearForm.zero(self.h.basis)

    @property
    def duals(self) -> Tuple[str, ...]:
        return self.dual_labels or tuple(f"{label}*" for label in self.h.labels)

    def derivation(self, a: int) -> Superderivation:
        label = self.h.labels[a]
        if label not in self.psi:
            return Superderivation.zero(self.base.dim, self.h.parity(a))
        return self.psi[label]


def validate_extension_datum(d: ExtensionDatum) -> ValidationReport:
    # Hypotheses of the double extension construction, each with a named axiom
    violations: List[Violation] = []
    h, base = d.h, d.base
    unknown = set(d.psi) - set(h.labels)
    for label in sorted(unknown):
        violations.append(Violation("psi domain", (label,), "not a basis label of h"))
    if len(set(d.duals)) != h.dim or set(d.duals) & set(base.basis.labels + h.labels):
        violations.append(Violation("dual labels", d.duals, "must be distinct and unused"))
    for a in range(h.dim):
        psi = d.derivation(a)
        label = h.labels[a]
        if psi.dim != base.dim:
            detail = f"matrix is not {base.dim}x{base.dim}"
            violations.append(Violation("psi size", (label,), detail))
            continue
        if psi.degree != h.parity(a):
            violations.append(Violation("psi degree", (label,), "degree differs from parity"))
        for violation in is_superderivation(base.algebra, psi, psi.degree).violations:
            violations.append(Violation("psi superderivation", (label,) + violation.witness))
        for violation in is_skew_supersymmetric(base, psi).violations:
            violations.append(Violation("psi skew-supersymmetry", (label,) + violation.witness))
    if not violations:
        # psi([Z, W]) = [psi(Z), psi(W)]
        for a in range(h.dim):
            for b in range(h.dim):
                expected = Superderivation.zero(base.dim, (h.parity(a) + h.parity(b)) % 2)
                for c, coeff in h.structure_constant(a, b).items():
                    expected = expected + coeff * d.derivation(c)
                actual = lie_bracket_of_derivations(d.derivation(a), d.derivation(b))
                if actual.matrix != expected.matrix:
                    violations.append(Violation("psi morphism", (h.labels[a], h.labels[b])))
    gamma = QuadraticLieSuperalgebra(h, d.gamma_form)
    for violation in validate_form(gamma).violations:
        if violation.axiom != "non-degeneracy":
            violations.append(Violation(f"gamma {violation.axiom}", violation.witness))
    for violation in validate_algebra(h).violations:
        violations.append(Violation(f"h {violation.axiom}", violation.witness))
    return ValidationReport(f"extension of {base.name}", tuple(violations))


def _parity_partition(parity: Sequence[int]) -> List[int]:
    # stable partition of positions, evens first
    return [i for i, p in enumerate(parity) if p == 0] + [i for i, p in enumerate(parity) if p]


def double_extension(d: ExtensionDatum, name: str = "") -> QuadraticLieSuperalgebra:
    """The double extension h ⊕ g ⊕ h* of the base g by h.

    Brackets, for Z, W in h, X, Y in g and f in h*:
        [Z, W] = [Z, W]_h, [Z, X] = psi(Z) X, [Z, f] = pi(Z) f with
        (pi(Z) f)(W) = -(-1)^{zf} f([Z, W]), [X, Y] = [X, Y]_g + phi(X, Y) with
        phi(X, Y)(Z) = (-1)^{(x+y)z} B(psi(Z) X, Y), and h* central against g and h*.
    Form: B + gamma on g and h, f(W) pairing h* with h.
    """
    report = validate_extension_datum(d)
    if not report.ok:
        first = report.violations[0]
        raise InputError(f"invalid extension datum: {first.describe()}")
    h, q = d.h, d.base
    g = q.algebra
    H, N = h.dim, g.dim
    raw_labels = list(h.labels) + list(g.labels) + list(d.duals)
    raw_parity = list(h.basis.parity) + list(g.basis.parity) + list(h.basis.parity)
    order = _parity_partition(raw_parity)
    position = {raw: new for new, raw in enumerate(order)}
    basis = GradedBasis(tuple(raw_labels[i] for i in order), tuple(raw_parity[i] for i in order))

    def zi(a):
        return position[a]

    def xi(i):
        return position[H + i]

    def fi(a):
        return position[H + N + a]

    brackets: Dict[Tuple[int, int], Dict[int, Fraction]] = {}

    def put(left: int, right: int, target: int, value: Fraction) -> None:
        if value:
            entry = brackets.setdefault((left, right), {})
            entry[target] = entry.get(target, Fraction(0)) + value

    for a in range(H):
        for b in range(a, H):
            for c, coeff in h.structure_constant(a, b).items():
                put(zi(a), zi(b), zi(c), coeff)
        psi = d.derivation(a)
        for i in range(N):
            for k, coeff in enumerate(psi.image(i)):
                put(zi(a), xi(i), xi(k), coeff)
        for b in range(H):
            # pi(Z_a) f_b = -(-1)^{z_a z_b} sum_c f_b([Z_a, Z_c]) f_c
            s = -sign(h.parity(a) * h.parity(b))
            for c in range(H):
                put(zi(a), fi(b), fi(c), s * h.structure_constant(a, c).get(b, Fraction(0)))
    for i in range(N):
        for j in range(i, N):
            for k, coeff in g.structure_constant(i, j).items():
                put(xi(i), xi(j), xi(k), coeff)
            x_i, x_j = g.vector(i), g.vector(j)
            for c in range(H):
                s = sign((g.parity(i) + g.parity(j)) * h.parity(c))
                put(xi(i), xi(j), fi(c), s * q.form.value(d.derivation(c).apply(x_i), x_j))

    algebra = LieSuperalgebra.from_brackets(
        basis, [(i, j, vec) for (i, j), vec in brackets.items()], name or f"{q.name}_ext"
    )
    gamma = d.gamma_form
    size = basis.dim
    gram = [[Fraction(0)] * size for _ in range(size)]
    for i in range(N):
        for j in range(N):
            gram[xi(i)][xi(j)] = q.form.gram[i][j]
    for a in range(H):
        for b in range(H):
            gram[zi(a)][zi(b)] = gamma.gram[a][b]
        # f_a(Z_a) = 1 and B(Z_a, f_a) = (-1)^{z_a} f_a(Z_a)
        gram[fi(a)][zi(a)] = Fraction(1)
        gram[zi(a)][fi(a)] = Fraction(sign(h.parity(a)))
    extended = QuadraticLieSuperalgebra(algebra, BilinearForm(basis, tuple(map(tuple, gram))))
    log.debug("%s: double extension of dimension %d", extended.name, size)
    return extended


def one_dim_double_extension(
    q: QuadraticLieSuperalgebra,
    derivation: Superderivation,
    e_label: str = "e",
    f_label: str = "f",
    name: str = "",
) -> QuadraticLieSuperalgebra:
    """[X, Y] = [X, Y]_g + B(DX, Y) f, [e, X] = DX, f central, B(e, f) = 1."""
    if derivation.degree != 0:
        raise InputError("a one-dimensional double extension needs an even derivation")
    report = is_superderivation(q.algebra, derivation, 0).merged(
        is_skew_supersymmetric(q, derivation)
    )
    if not report.ok:
        raise InputError(f"invalid derivation: {report.violations[0].describe()}")
    g = q.algebra
    basis_labels = [e_label] + [g.labels[i] for i in g.basis.even_indices] + [f_label]
    basis_labels += [g.labels[i] for i in g.basis.odd_indices]
    split = g.basis.even_dim + 2
    basis = GradedBasis.of(basis_labels[:split], basis_labels[split:])
    e, f = basis.index(e_label), basis.index(f_label)
    place = [basis.index(label) for label in g.labels]
    brackets = []
    for j in range(g.dim):
        image = {place[k]: c for k, c in enumerate(derivation.image(j)) if c}
        if image:
            brackets.append((e, place[j], image))
    for i in range(g.dim):
        for j in range(i, g.dim):
            vector = {place[k]: c for k, c in g.structure_constant(i, j).items()}
            pairing = q.form.value(derivation.image(i), g.vector(j))
            if pairing:
                vector[f] = pairing
            if vector:
                brackets.append((place[i], place[j], vector))
    algebra = LieSuperalgebra.from_brackets(basis, brackets, name or f"{q.name}_ext")
    gram = [[Fraction(0)] * basis.dim for _ in range(basis.dim)]
    for i in range(g.dim):
        for j in range(g.dim):
            gram[place[i]][place[j]] = q.form.gram[i][j]
    gram[e][f] = gram[f][e] = Fraction(1)
    extended = QuadraticLieSuperalgebra(algebra, BilinearForm(basis, tuple(map(tuple, gram))))

    general = double_extension(one_dim_datum(q, derivation, e_label, f_label), extended.name)
    if general.algebra.constants != algebra.constants or general.form.gram != extended.form.gram:
        raise EngineError("one-dimensional and general double extensions disagree")
    return extended


def one_dim_datum(
    q: QuadraticLieSuperalgebra, derivation: Superderivation, e_label: str = "e", f_label: str = "f"
) -> ExtensionDatum:
    # an odd derivation gives an odd line h; the morphism condition then asks D^2 = 0
    line = GradedBasis.of([e_label]) if derivation.degree == 0 else GradedBasis.of([], [e_label])
    h = LieSuperalgebra(line, {}, e_label)
    return ExtensionDatum(q, h, {e_label: derivation}, None, (f_label,))


def random_extension_datum(
    q: QuadraticLieSuperalgebra,
    rng: np.random.Generator,
    h_dim: int = 1,
    height: int = 3,
    labels: Optional[Sequence[str]] = None,
) -> ExtensionDatum:
    """Random datum over an abelian even h.

    psi sends every basis vector of h to a multiple of one random skew derivation, so the
    morphism condition holds; gamma is a random symmetric form on h.
    """
    space = skew_superderivation_space(q, 0)
    derivation = Superderivation.zero(q.dim, 0)
    for basis_derivation in space:
        derivation = derivation + random_rational(rng, height) * basis_derivation
    labels = list(labels or [f"h{a + 1}" for a in range(h_dim)])
    h = LieSuperalgebra(GradedBasis.of(labels), {}, "h")
    psi = {label: random_rational(rng, height) * derivation for label in labels}
    gram = [[Fraction(0)] * h_dim for _ in range(h_dim)]
    for a in range(h_dim):
        for b in range(a, h_dim):
            gram[a][b] = gram[b][a] = random_rational(rng, height)
    gamma = BilinearForm(h.basis, tuple(map(tuple, gram)))
    return ExtensionDatum(q, h, psi, gamma, tuple(f"{label}*" for label in labels))
