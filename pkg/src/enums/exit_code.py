from enum import IntEnum


class ExitCode(IntEnum):
    POSITIVE = 0
    NEGATIVE = 1
    INPUT_ERROR = 2
    WORK_LIMIT = 3
