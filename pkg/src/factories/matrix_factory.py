"""
Deterministic matrix generators for property tests and the gen command.

Randomness comes from ``random.Random(seed)``, one generator per call, so the
same (n, seed) always draws the same entries in the same order: the upper
triangle row by row, each entry as numerator then denominator.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from config.matrices import (
    DEFAULT_MAX_DENOMINATOR,
    DEFAULT_MAX_NUMERATOR,
    DEFAULT_PSD_ENTRY_BOUND,
    HORN_MATRIX,
)
from core.accessors import get_config
from core.errors import OutOfRange
from enums.config_key import ConfigKey
from enums.matrix_kind import MatrixKind
from matrix.symmetric_matrix import SymmetricMatrix


def _bounds() -> tuple[int, int]:
    config = get_config()
    return (
        int(config.get(ConfigKey.MAX_NUMERATOR, DEFAULT_MAX_NUMERATOR)),
        int(config.get(ConfigKey.MAX_DENOMINATOR, DEFAULT_MAX_DENOMINATOR)),
    )


def _require_order(n: int):
    if n < 1:
        raise OutOfRange(f"matrix order must be >= 1, got {n}")


class MatrixFactory:
    """Builds the matrices used as test corpora."""

    @staticmethod
    def psd_from_factor(g: Sequence[Sequence[int]]) -> SymmetricMatrix:
        """
        Return G^T G for a square integer matrix G.
        """
        n = len(g)
        return SymmetricMatrix.from_upper(
            n, lambda i, j: sum(Fraction(g[k][i]) * g[k][j] for k in range(n))
        )

    @staticmethod
    def gen_psd(n: int, seed: int) -> SymmetricMatrix:
        """
        G^T G for a pseudo-random integer G with entries in [-b, b], b taken
        from generator.psd_entry_bound.
        """
        _require_order(n)
        config = get_config()
        bound = int(config.get(ConfigKey.PSD_ENTRY_BOUND, DEFAULT_PSD_ENTRY_BOUND))
        rng = random.Random(seed)
        g = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        return MatrixFactory.psd_from_factor(g)

    @staticmethod
    def gen_nonnegative(n: int, seed: int) -> SymmetricMatrix:
        _require_order(n)
        max_numerator, max_denominator = _bounds()
        rng = random.Random(seed)
        return SymmetricMatrix.from_upper(
            n,
            lambda i, j: Fraction(
                rng.randint(0, max_numerator), rng.randint(1, max_denominator)
            ),
        )

    @staticmethod
    def gen_random(n: int, seed: int) -> SymmetricMatrix:
        """
        Symmetric matrix with signed entries p/q, |p| <= max_numerator and
        1 <= q <= max_denominator.
        """
        _require_order(n)
        max_numerator, max_denominator = _bounds()
        rng = random.Random(seed)
        return SymmetricMatrix.from_upper(
            n,
            lambda i, j: Fraction(
                rng.randint(-max_numerator, max_numerator),
                rng.randint(1, max_denominator),
            ),
        )

    @staticmethod
    def horn_matrix() -> SymmetricMatrix:
        return SymmetricMatrix(HORN_MATRIX)

    @staticmethod
    def create(kind: MatrixKind, n: int, seed: int) -> SymmetricMatrix:
        """
        Build a matrix of the given kind. The order is ignored for the Horn
        matrix.
        """
        if kind is MatrixKind.HORN:
            return MatrixFactory.horn_matrix()
        if kind is MatrixKind.PSD:
            return MatrixFactory.gen_psd(n, seed)
        if kind is MatrixKind.NONNEG:
            return MatrixFactory.gen_nonnegative(n, seed)
        return MatrixFactory.gen_random(n, seed)
