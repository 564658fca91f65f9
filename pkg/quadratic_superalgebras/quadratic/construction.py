# Building quadratic Lie superalgebras from smaller pieces

import logging
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from ..core.algebra import GradedBasis, LieSuperalgebra
from ..core.errors import InputError
from ..core.linalg import apply, inverse
from ..core.sampling import random_invertible
from ..core.scalars import ScalarLike, as_scalar
from .form import BilinearForm, QuadraticLieSuperalgebra

log = logging.getLogger(__name__)


def orthogonal_direct_sum(
    q1: QuadraticLieSuperalgebra, q2: QuadraticLieSuperalgebra, name: str = ""
) -> QuadraticLieSuperalgebra:
    basis, left, right = q1.basis.direct_sum(q2.basis)
    algebra = q1.algebra.direct_sum(q2.algebra, name or f"{q1.name}+{q2.name}")
    gram = [[Fraction(0)] * basis.dim for _ in range(basis.dim)]
    for q, index in ((q1, left), (q2, right)):
        for i in range(q.dim):
            for j in range(q.dim):
                gram[index[i]][index[j]] = q.form.gram[i][j]
    return QuadraticLieSuperalgebra(algebra, BilinearForm(basis, tuple(map(tuple, gram))))


def random_graded_change_of_basis(
    q: QuadraticLieSuperalgebra, rng: np.random.Generator, height: int = 3
) -> QuadraticLieSuperalgebra:
    # Independent random invertible blocks on the even and odd parts
    vectors = []
    for indices in (q.basis.even_indices, q.basis.odd_indices):
        block = random_invertible(rng, len(indices), height) if indices else []
        for row in block:
            full = [Fraction(0)] * q.dim
            for position, i in enumerate(indices):
                full[i] = row[position]
            vectors.append(full)
    return q.change_basis(vectors, name=f"{q.name}'")


def solve_odd_brackets_by_invariance(
    even: QuadraticLieSuperalgebra,
    odd_labels: Sequence[str],
    odd_pairs: Sequence,
    actions: Mapping[str, Sequence[Sequence[ScalarLike]]],
    name: str = "",
) -> QuadraticLieSuperalgebra:
    """Attach an odd module to a quadratic Lie algebra.

    actions[W] is the matrix of ad(W) on the odd part, column j holding the image of the j-th
    odd vector. The odd-odd brackets are the unique even vectors with
    B([u, v], W) = -B(u, ad(W) v), which is what invariance forces.
    """
    g0 = even.algebra
    if g0.basis.odd_dim:
        raise InputError("the base of an odd module must be purely even")
    basis = GradedBasis.of(g0.labels, odd_labels)
    m, r = g0.dim, len(odd_labels)
    odd_form = BilinearForm.from_pairs(GradedBasis.of([], odd_labels), odd_pairs)
    matrices = {}
    for label, matrix in actions.items():
        if len(matrix) != r or any(len(row) != r for row in matrix):
            raise InputError(f"action of {label} must be {r}x{r}")
        matrices[g0.basis.index(label)] = [[as_scalar(x) for x in row] for row in matrix]

    brackets = [(i, j, vec) for (i, j), vec in g0.constants.items()]
    for w, matrix in matrices.items():
        for j in range(r):
            image = {m + k: matrix[k][j] for k in range(r) if matrix[k][j]}
            if image:
                brackets.append((w, m + j, image))

    to_coefficients = inverse(even.form.gram)
    for a in range(r):
        for b in range(a, r):
            rhs = []
            for w in range(m):
                matrix = matrices.get(w)
                if matrix is None:
                    rhs.append(Fraction(0))
                    continue
                image = [matrix[k][b] for k in range(r)]
                pairing = sum(
                    (odd_form.gram[a][k] * image[k] for k in range(r) if image[k]), Fraction(0)
                )
                rhs.append(-pairing)
            coefficients = apply(to_coefficients, rhs)
            if any(coefficients):
                brackets.append((m + a, m + b, {i: c for i, c in enumerate(coefficients) if c}))

    algebra = LieSuperalgebra.from_brackets(basis, brackets, name)
    gram = [[Fraction(0)] * basis.dim for _ in range(basis.dim)]
    for i in range(m):
        for j in range(m):
            gram[i][j] = even.form.gram[i][j]
    for a in range(r):
        for b in range(r):
            gram[m + a][m + b] = odd_form.gram[a][b]
    log.debug("%s: odd brackets solved by invariance", name)
    return QuadraticLieSuperalgebra(algebra, BilinearForm(basis, tuple(map(tuple, gram))))
