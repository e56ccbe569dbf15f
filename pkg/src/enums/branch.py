from enum import Enum, auto


class Branch(Enum):
    """Which child of a projection a matrix came from."""

    A2 = auto()
    SIMPLEX = auto()
