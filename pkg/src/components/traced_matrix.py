from __future__ import annotations

from dataclasses import dataclass

from enums.branch import Branch
from matrix.symmetric_matrix import NormalizedForm, SymmetricMatrix
from polytope.vertex import SimplexVertexMatrix


@dataclass(frozen=True)
class LineageStep:
    """
    One projection step: the normalized form of the parent and the branch that
    produced the child, with the simplex used on the SIMPLEX branch.
    """

    parent_form: NormalizedForm
    branch: Branch
    simplex: SimplexVertexMatrix | None = None


@dataclass(frozen=True)
class TracedMatrix:
    """
    A frontier matrix together with the projection steps leading to it from
    the root.
    """

    matrix: SymmetricMatrix
    lineage: tuple[LineageStep, ...] = ()

    @property
    def depth(self) -> int:
        return len(self.lineage)

    def child(self, matrix: SymmetricMatrix, step: LineageStep) -> "TracedMatrix":
        return TracedMatrix(matrix, self.lineage + (step,))
