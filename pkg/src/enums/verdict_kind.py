from enum import Enum


class VerdictKind(Enum):
    COPOSITIVE = "copositive"
    NOT_COPOSITIVE = "not copositive"
    STRICTLY_COPOSITIVE = "strictly copositive"
    NOT_STRICTLY_COPOSITIVE = "not strictly copositive"

    @property
    def is_negative(self) -> bool:
        return self in (VerdictKind.NOT_COPOSITIVE, VerdictKind.NOT_STRICTLY_COPOSITIVE)
