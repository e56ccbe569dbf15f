"""
Grid refutation: exact evaluation of the quadratic form on every lattice
point of the standard simplex with a fixed denominator. Finding a negative
value disproves copositivity; finding none proves nothing.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterator

from components.grid_spec import GridSpec
from matrix.symmetric_matrix import SymmetricMatrix


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """
    All tuples of `parts` nonnegative integers summing to `total`, ordered
    lexicographically from the largest first entry down: (K, 0, ...) comes
    first and (..., 0, K) last.
    """
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def integer_scaled(a: SymmetricMatrix) -> tuple[tuple[int, ...], ...]:
    """
    a multiplied by the lcm of its denominators, which keeps every sign of
    the quadratic form and lets the grid run on machine integers.
    """
    scale = lcm(*(value.denominator for row in a.rows for value in row))
    return tuple(tuple(int(value * scale) for value in row) for row in a.rows)


def grid_refute(
    a: SymmetricMatrix, grid: GridSpec | None = None
) -> tuple[Fraction, ...] | None:
    """
    First lattice point x = k / K with x^T a x < 0, or None. Without a grid
    the denominator comes from the grid_denominator config key.
    """
    K = (grid if grid is not None else GridSpec.from_config()).denominator
    scaled = integer_scaled(a)
    n = a.order
    for point in compositions(K, n):
        value = 0
        for i in range(n):
            if point[i]:
                value += point[i] * sum(
                    scaled[i][j] * point[j] for j in range(n) if point[j]
                )
        if value < 0:
            return tuple(Fraction(k, K) for k in point)
    return None
