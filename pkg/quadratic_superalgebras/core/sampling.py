# Seeded random rationals for property suites and random constructions

from fractions import Fraction
from typing import List, Sequence

import numpy as np

from .linalg import Vector, rank


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, height: int = 5, nonzero: bool = False) -> Fraction:
    # numerator in [-height, height], denominator in [1, height]
    while True:
        value = Fraction(int(rng.integers(-height, height + 1)), int(rng.integers(1, height + 1)))
        if value or not nonzero:
            return value


def random_vector(rng: np.random.Generator, n: int, height: int = 5) -> Vector:
    return tuple(random_rational(rng, height) for _ in range(n))


def random_vector_on(
    rng: np.random.Generator, n: int, support: Sequence[int], height: int = 5
) -> Vector:
    entries = [Fraction(0)] * n
    for i in support:
        entries[i] = random_rational(rng, height)
    return tuple(entries)


def random_invertible(rng: np.random.Generator, n: int, height: int = 3) -> List[Vector]:
    while True:
        rows = [random_vector(rng, n, height) for _ in range(n)]
        if rank(rows, n) == n:
            return rows
