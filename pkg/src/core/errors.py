"""
Errors raised by the library. Every error derives from CopositivityError so
callers can catch the whole family at once.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from components.work_stats import WorkStats


class CopositivityError(Exception):
    """Base class for all library errors."""


class OrderTooSmall(CopositivityError):
    pass


class DimensionMismatch(CopositivityError):
    pass


class InvalidPermutation(CopositivityError):
    pass


class NonpositiveScale(CopositivityError):
    pass


class AsymmetricMatrix(CopositivityError):
    pass


class NoNegativeSign(CopositivityError):
    pass


class AlreadySimplicial(CopositivityError):
    pass


class OutOfRange(CopositivityError):
    pass


class ConfigValueError(CopositivityError):
    """A config file entry or environment variable holds an unusable value."""


class DegenerateSimplex(CopositivityError):
    pass


class WrongOrder(CopositivityError):
    pass


class LabelParseError(CopositivityError):
    pass


class MatrixFileError(CopositivityError):
    pass


class RationalParseError(MatrixFileError):
    pass


class WitnessLiftFailure(CopositivityError):
    """
    A lifted witness failed exact verification. This always points to a bug,
    never to a property of the input matrix.
    """


class WorkLimitExceeded(CopositivityError):
    """
    The caller-supplied cap on processed matrices was hit before a verdict.

    stats : WorkStats : work done up to the point the cap was hit
    """

    def __init__(self, message: str, stats: "WorkStats"):
        super().__init__(message)
        self.stats = stats
