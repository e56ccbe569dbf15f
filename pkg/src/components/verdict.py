from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from components.work_stats import WorkStats
from enums.verdict_kind import VerdictKind


@dataclass(frozen=True)
class Verdict:
    """
    Answer of the decision loop.

    kind : VerdictKind : the decision
    witness : tuple[Fraction, ...] | None : nonnegative unit-sum vector
        certifying a negative decision, None otherwise
    value : Fraction | None : quadratic form value at the witness
    stats : WorkStats : work done to reach the decision
    """

    kind: VerdictKind
    witness: tuple[Fraction, ...] | None
    value: Fraction | None
    stats: WorkStats

    def __post_init__(self):
        if self.kind.is_negative != (self.witness is not None):
            raise ValueError(f"{self.kind.value} verdict and witness presence disagree")

    @property
    def is_copositive(self) -> bool:
        return not self.kind.is_negative
