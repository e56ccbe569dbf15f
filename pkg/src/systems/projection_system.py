from __future__ import annotations

from functools import lru_cache, reduce
from math import comb
from typing import Sequence

from components.traced_matrix import LineageStep, TracedMatrix
from core.errors import OrderTooSmall, OutOfRange, WitnessLiftFailure
from enums.branch import Branch
from matrix.symmetric_matrix import SymmetricMatrix, congruence, normalize
from polytope.label import sign_vector_to_label
from polytope.subdivision import extend_with_zeros, vmatrix
from polytope.vertex import SimplexVertexMatrix


@lru_cache(maxsize=1024)
def simplices_for(sign_vector: tuple[int, ...]) -> tuple[SimplexVertexMatrix, ...]:
    """
    Simplices covering {y in the standard simplex : sign_vector . y <= 0}, the
    subdivision of the signed part coned with the zero-sign unit vertices.
    """
    label, zeros = sign_vector_to_label(sign_vector)
    return tuple(extend_with_zeros(vmatrix(label), zeros))


def proj(k: TracedMatrix) -> list[TracedMatrix]:
    """
    Projection of a frontier matrix to the matrices of one order less whose
    joint copositivity decides its own (given a nonnegative corner): D A2 D
    first, then W^T B W for every simplex W when the first row has a negative
    entry.

    Raises:
        OrderTooSmall: the matrix has order 1
    """
    if k.matrix.order < 2:
        raise OrderTooSmall(f"cannot project a matrix of order {k.matrix.order}")
    form = normalize(k.matrix)
    children = [k.child(form.scaled_tail, LineageStep(form, Branch.A2))]
    if form.has_negative_sign():
        for simplex in simplices_for(form.sign_vector):
            children.append(
                k.child(
                    congruence(form.b_matrix, simplex),
                    LineageStep(form, Branch.SIMPLEX, simplex),
                )
            )
    return children


def replay_lineage(
    root: SymmetricMatrix, lineage: Sequence[LineageStep]
) -> SymmetricMatrix:
    """
    Re-apply the projection steps of a lineage starting from the root.

    Raises:
        WitnessLiftFailure: a step's recorded parent does not match the replay
    """
    current = root
    for depth, step in enumerate(lineage):
        form = normalize(current)
        if form != step.parent_form:
            raise WitnessLiftFailure(f"lineage diverges from the root at depth {depth}")
        if step.branch is Branch.A2:
            current = form.scaled_tail
        else:
            current = congruence(form.b_matrix, step.simplex)
    return current


def work_bound(n: int) -> int:
    """
    Worst-case bound 2^((n-2)(n-3)/2 + 1) on the matrices the decision loop
    handles for order n.

    Raises:
        OutOfRange: n < 3
    """
    if n < 3:
        raise OutOfRange(f"work bound is defined for n >= 3, got {n}")
    return 2 ** ((n - 2) * (n - 3) // 2 + 1)


def level_cap(order: int) -> int:
    """
    Most matrices one projection of an order-`order` matrix can produce:
    D A2 D plus the largest subdivision count over labels with at most
    order - 1 indices.
    """
    if order < 2:
        raise OutOfRange(f"projection needs order >= 2, got {order}")
    return comb(order - 2, (order - 2) // 2) + 1


def level_bound(n: int) -> int:
    """
    Product of level_cap over orders n down to 4, the chained per-level
    maximum that the power-of-two work bound majorizes.
    """
    return reduce(lambda acc, order: acc * level_cap(order), range(4, n + 1), 1)


def depth_bound(n: int, depth: int) -> int:
    """
    Most matrices that can sit at a given depth below a root of order n.
    """
    if not 0 <= depth <= n - 1:
        raise OutOfRange(f"depth {depth} outside 0..{n - 1}")
    return reduce(lambda acc, j: acc * level_cap(n - j), range(depth), 1)
