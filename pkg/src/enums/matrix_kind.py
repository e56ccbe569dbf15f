from enum import Enum


class MatrixKind(Enum):
    PSD = "psd"
    NONNEG = "nonneg"
    HORN = "horn"
    RANDOM = "random"
