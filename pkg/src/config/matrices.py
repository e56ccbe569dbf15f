HORN_MATRIX = (
    (1, -1, 1, 1, -1),
    (-1, 1, -1, 1, 1),
    (1, -1, 1, -1, 1),
    (1, 1, -1, 1, -1),
    (-1, 1, 1, -1, 1),
)
"""
Classical 5x5 copositive matrix that is not a sum of a positive semidefinite
and an entrywise nonnegative matrix.
"""

DEFAULT_MAX_NUMERATOR = 10
DEFAULT_MAX_DENOMINATOR = 10
DEFAULT_PSD_ENTRY_BOUND = 3
DEFAULT_GRID_DENOMINATOR = 12
