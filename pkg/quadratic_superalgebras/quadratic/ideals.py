# Graded ideals of quadratic Lie superalgebras: orthogonals and central lines

import logging
from typing import Optional

from ..core.algebra import bracket_of_subspaces, center, is_graded, is_ideal
from ..core.errors import InputError
from ..core.linalg import Subspace, nullspace, rank
from .form import QuadraticLieSuperalgebra

log = logging.getLogger(__name__)


def is_nondegenerate_subspace(q: QuadraticLieSuperalgebra, subspace: Subspace) -> bool:
    restricted = q.form.restricted_gram(subspace.rows)
    return rank(restricted, subspace.dim) == subspace.dim


def orthogonal_complement(q: QuadraticLieSuperalgebra, ideal: Subspace) -> Subspace:
    # {x : B(u, x) = 0 for every u in the ideal}
    g = q.algebra
    if not (is_ideal(g, ideal) and is_graded(g, ideal)):
        raise InputError("orthogonal_complement needs a graded ideal")
    equations = [
        tuple(q.form.value(u, g.vector(j)) for j in range(g.dim)) for u in ideal.rows
    ]
    complement = Subspace.span(nullspace(equations, g.dim), g.dim)
    if is_nondegenerate_subspace(q, ideal):
        # the complement of a non-degenerate ideal is a commuting, non-degenerate ideal
        if (
            not is_ideal(g, complement)
            or not bracket_of_subspaces(g, ideal, complement).is_zero()
            or (ideal + complement).dim != g.dim
        ):
            raise InputError(f"{q.name}: form is not invariant, orthogonal is not a complement")
    log.debug("%s: ideal of dim %d has orthogonal of dim %d", q.name, ideal.dim, complement.dim)
    return complement


def find_nondegenerate_central_line(q: QuadraticLieSuperalgebra) -> Optional[Subspace]:
    # Partial decomposability witness: a central even z with B(z, z) != 0
    even_center = center(q.algebra).coordinate_part(q.basis.even_indices)
    rows = even_center.rows
    gram = q.form.restricted_gram(rows)
    candidate = None
    for i in range(len(rows)):
        if gram[i][i]:
            candidate = rows[i]
            break
    else:
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                if gram[i][j]:
                    candidate = tuple(a + b for a, b in zip(rows[i], rows[j]))
                    break
            if candidate is not None:
                break
    if candidate is None:
        log.debug("%s: no non-degenerate central line found", q.name)
        return None
    return Subspace.span([candidate], q.dim)
