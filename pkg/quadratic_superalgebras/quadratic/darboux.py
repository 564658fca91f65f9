# Darboux frames: symplectic reduction of the odd block, dual frame of the even block

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from ..core.errors import DegenerateFormError
from ..core.linalg import Vector, inverse, transpose
from .form import QuadraticLieSuperalgebra

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DarbouxFrame:
    """Frames used by the Poisson bracket.

    odd_change_of_basis has the new odd vectors X^1..X^n, Y^1..Y^n as columns, written in
    odd-block coordinates, with B(X^i, Y^j) = delta_ij and all other pairings zero.
    even_dual_frame has Y^i (the B-dual of the i-th even basis vector) as its i-th row.
    """

    dim: int
    even_dim: int
    odd_change_of_basis: Tuple[Vector, ...]
    even_dual_frame: Tuple[Vector, ...]

    @property
    def n(self) -> int:
        return len(self.odd_change_of_basis) // 2

    def _odd_column(self, column: int) -> Vector:
        full = [Fraction(0)] * self.dim
        for r, row in enumerate(self.odd_change_of_basis):
            full[self.even_dim + r] = row[column]
        return tuple(full)

    def odd_x(self, k: int) -> Vector:
        return self._odd_column(k)

    def odd_y(self, k: int) -> Vector:
        return self._odd_column(self.n + k)

    def even_dual(self, i: int) -> Vector:
        full = [Fraction(0)] * self.dim
        full[: self.even_dim] = self.even_dual_frame[i]
        return tuple(full)

    @property
    def even_weights(self) -> Tuple[Vector, ...]:
        # B(Y^i, Y^j); equals the inverse of the even Gram block
        return self.even_dual_frame


def standard_symplectic(n: int) -> Tuple[Vector, ...]:
    rows = []
    for i in range(2 * n):
        row = [Fraction(0)] * (2 * n)
        if i < n:
            row[n + i] = Fraction(1)
        else:
            row[i - n] = Fraction(-1)
        rows.append(tuple(row))
    return tuple(rows)


def symplectic_reduction(gram: Tuple[Vector, ...]) -> Tuple[Vector, ...]:
    # Returns M whose columns X^1..X^n, Y^1..Y^n satisfy M^T G M = standard symplectic
    size = len(gram)

    def omega(u, v):
        return sum(
            (u[a] * gram[a][b] * v[b] for a in range(size) for b in range(size) if u[a] and v[b]),
            Fraction(0),
        )

    remaining: List[Vector] = [
        tuple(Fraction(1) if a == i else Fraction(0) for a in range(size)) for i in range(size)
    ]
    xs, ys = [], []
    while remaining:
        pivot = next(
            (
                (a, b)
                for a in range(len(remaining))
                for b in range(a + 1, len(remaining))
                if omega(remaining[a], remaining[b])
            ),
            None,
        )
        if pivot is None:
            raise DegenerateFormError(
                f"odd block degenerate: {len(remaining)} vectors left without a symplectic partner"
            )
        a, b = pivot
        x = remaining[a]
        scale = omega(remaining[a], remaining[b])
        y = tuple(c / scale for c in remaining[b])
        xs.append(x)
        ys.append(y)
        rest = []
        for index, w in enumerate(remaining):
            if index in pivot:
                continue
            wy, wx = omega(w, y), omega(w, x)
            rest.append(tuple(w[c] - wy * x[c] + wx * y[c] for c in range(size)))
        remaining = rest
    return transpose(xs + ys)


def darboux_frame(q: QuadraticLieSuperalgebra) -> DarbouxFrame:
    basis = q.basis
    if basis.odd_dim % 2:
        raise DegenerateFormError(f"odd part of dimension {basis.odd_dim} cannot be symplectic")
    odd_block = q.form.block(basis.odd_indices)
    change = symplectic_reduction(odd_block) if basis.odd_dim else ()
    even_block = q.form.block(basis.even_indices)
    if basis.even_dim:
        try:
            dual = inverse(even_block)
        except ValueError:
            raise DegenerateFormError("even Gram block is singular") from None
    else:
        dual = ()
    log.debug("%s: Darboux frame with n=%d, m=%d", q.name, basis.odd_dim // 2, basis.even_dim)
    return DarbouxFrame(basis.dim, basis.even_dim, change, dual)
