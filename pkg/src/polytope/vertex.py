from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from core.errors import DimensionMismatch, OutOfRange
from matrix.rational import HALF, ONE, ZERO


@dataclass(frozen=True, order=True)
class SimplexVertex:
    """
    A vertex e_i or a midpoint M_{i,j} = (e_i + e_j) / 2 of the standard
    simplex in ambient dimension m. Indices are 1-based.

    Ordering puts every e_i before every midpoint, then sorts by index, which
    is the canonical column order inside a terminal simplex.
    """

    kind: int
    indices: tuple[int, ...]
    ambient: int

    @staticmethod
    def unit(i: int, ambient: int) -> "SimplexVertex":
        if not 1 <= i <= ambient:
            raise OutOfRange(f"index {i} outside 1..{ambient}")
        return SimplexVertex(0, (i,), ambient)

    @staticmethod
    def midpoint(i: int, j: int, ambient: int) -> "SimplexVertex":
        if i == j:
            raise OutOfRange(f"midpoint needs two distinct indices, got {i} twice")
        for index in (i, j):
            if not 1 <= index <= ambient:
                raise OutOfRange(f"index {index} outside 1..{ambient}")
        return SimplexVertex(1, (min(i, j), max(i, j)), ambient)

    @property
    def is_midpoint(self) -> bool:
        return self.kind == 1

    @property
    def coordinates(self) -> tuple[Fraction, ...]:
        weight = HALF if self.is_midpoint else ONE
        return tuple(
            weight if k + 1 in self.indices else ZERO for k in range(self.ambient)
        )

    def support(self) -> frozenset[int]:
        return frozenset(self.indices)

    def __str__(self) -> str:
        if self.is_midpoint:
            return f"M({self.indices[0]},{self.indices[1]})"
        return f"e{self.indices[0]}"


@dataclass(frozen=True)
class SimplexVertexMatrix:
    """
    Ordered vertex columns spanning one simplex of a subdivision.

    columns : the vertices, all with the same ambient dimension
    ambient : m, the number of coordinates of every vertex
    """

    columns: tuple[SimplexVertex, ...]
    ambient: int

    def __post_init__(self):
        for vertex in self.columns:
            if vertex.ambient != self.ambient:
                raise DimensionMismatch(
                    f"vertex {vertex} lives in dimension {vertex.ambient}, "
                    f"expected {self.ambient}"
                )

    @staticmethod
    def of(columns, ambient: int) -> "SimplexVertexMatrix":
        return SimplexVertexMatrix(tuple(columns), ambient)

    @property
    def size(self) -> int:
        return len(self.columns)

    def vectors(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(vertex.coordinates for vertex in self.columns)

    def vertex_set(self) -> frozenset[SimplexVertex]:
        return frozenset(self.columns)

    def support(self) -> frozenset[int]:
        indices: set[int] = set()
        for vertex in self.columns:
            indices.update(vertex.indices)
        return frozenset(indices)

    def lift(self, z) -> tuple[Fraction, ...]:
        """
        Map simplex weights z to the point W z.

        Raises:
            DimensionMismatch: len(z) differs from the number of columns
        """
        if len(z) != self.size:
            raise DimensionMismatch(
                f"{len(z)} weights given for a simplex with {self.size} vertices"
            )
        point = [ZERO] * self.ambient
        for weight, vertex in zip(z, self.columns):
            if not weight:
                continue
            share = weight * (HALF if vertex.is_midpoint else ONE)
            for index in vertex.indices:
                point[index - 1] += share
        return tuple(point)

    def __str__(self) -> str:
        return "{" + ", ".join(str(vertex) for vertex in self.columns) + "}"
