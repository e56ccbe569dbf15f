from __future__ import annotations

from math import comb

from core.errors import AlreadySimplicial, DimensionMismatch, OutOfRange
from polytope.label import (
    PolytopeLabel,
    ZeroIndexList,
    is_simplicial,
    vertices_of,
)
from polytope.vertex import SimplexVertex, SimplexVertexMatrix


def decompose(
    label: PolytopeLabel,
) -> tuple[PolytopeLabel, PolytopeLabel, SimplexVertex]:
    """
    Split a non-simplicial label along M_{a1,b1}: the polytope is the union of
    conv{M_{a1,b1}, child1} and conv{M_{a1,b1}, child2}.

    Args:
        label (PolytopeLabel): label with s >= 1 and t >= 2

    Raises:
        AlreadySimplicial: the label is already a simplex

    Returns:
        tuple: (label without a1, label without b1, M_{a1,b1})
    """
    if is_simplicial(label):
        raise AlreadySimplicial(f"{label} is already simplicial")
    a1, b1 = label.a_list[0], label.b_list[0]
    child1 = PolytopeLabel(label.a_list[1:], label.b_list, label.ambient)
    child2 = PolytopeLabel(label.a_list, label.b_list[1:], label.ambient)
    return child1, child2, SimplexVertex.midpoint(a1, b1, label.ambient)


def vmatrix(label: PolytopeLabel) -> list[SimplexVertexMatrix]:
    """
    Subdivide a label's polytope into simplices with pairwise disjoint
    interiors. Each simplex lists the split vertices in the order they were
    found, then the vertices of the simplicial label it ended on.

    The worklist is a stack popped depth first, first child before second,
    so the output order is fixed.
    """
    simplices: list[SimplexVertexMatrix] = []
    stack: list[tuple[PolytopeLabel, tuple[SimplexVertex, ...]]] = [(label, ())]
    while stack:
        current, splits = stack.pop()
        if is_simplicial(current):
            columns = splits + tuple(vertices_of(current))
            simplices.append(SimplexVertexMatrix(columns, label.ambient))
            continue
        child1, child2, split = decompose(current)
        stack.append((child2, splits + (split,)))
        stack.append((child1, splits + (split,)))
    return simplices


def extend_with_zeros(
    simplices: list[SimplexVertexMatrix], zeros: ZeroIndexList
) -> list[SimplexVertexMatrix]:
    """
    Cone every simplex with the unit vertices of the zero-sign indices,
    appended in ascending order.

    Raises:
        DimensionMismatch: ambient dimensions disagree, or a zero index is
            already in the support of a simplex
    """
    if zeros.r == 0:
        return list(simplices)
    extension = tuple(SimplexVertex.unit(c, zeros.ambient) for c in zeros.c_list)
    extended = []
    for simplex in simplices:
        if simplex.ambient != zeros.ambient:
            raise DimensionMismatch(
                f"simplex lives in dimension {simplex.ambient}, "
                f"zero list in dimension {zeros.ambient}"
            )
        overlap = simplex.support() & set(zeros.c_list)
        if overlap:
            raise DimensionMismatch(
                f"zero indices {sorted(overlap)} overlap the simplex support"
            )
        extended.append(
            SimplexVertexMatrix(simplex.columns + extension, simplex.ambient)
        )
    return extended


def subdivision_count(k: int, m: int) -> int:
    """
    Number of simplices vmatrix produces for [[1..k],[k+1..m]]_m.

    Raises:
        OutOfRange: unless m >= 2 and 0 <= k <= m - 1
    """
    if m < 2 or not 0 <= k <= m - 1:
        raise OutOfRange(f"need m >= 2 and 0 <= k <= m-1, got k={k}, m={m}")
    return comb(m - 1, k)
