"""
Exact geometry on simplex vertex matrices, computed with sympy's rational
matrices: affine rank, barycentric coordinates and normalized volume.

Volumes follow the Gram-determinant convention. For a d-simplex with edge
vectors E = [v_1 - v_0, ..., v_d - v_0] the volume is sqrt(det(E^T E)) / d!,
and it is reported relative to the coordinate face of the same dimension,
whose Gram determinant is d + 1. A simplex spanning a whole coordinate face
therefore has volume 1, and every simplex inside such a face has a rational
volume.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy

from core.errors import DegenerateSimplex, DimensionMismatch
from polytope.vertex import SimplexVertex, SimplexVertexMatrix


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy(value) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _edge_matrix(points: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    base = points[0]
    return sympy.Matrix(
        [
            [_to_sympy(point[k] - base[k]) for point in points[1:]]
            for k in range(len(base))
        ]
    )


def affine_rank(vertices: Sequence[SimplexVertex]) -> int:
    """
    Rank of the difference vectors v_i - v_0; an empty list has rank -1.
    """
    if not vertices:
        return -1
    if len(vertices) == 1:
        return 0
    return _edge_matrix([v.coordinates for v in vertices]).rank()


def is_affinely_independent(w: SimplexVertexMatrix) -> bool:
    return affine_rank(w.columns) == w.size - 1


def barycentric_coordinates(
    w: SimplexVertexMatrix, point: Sequence[Fraction]
) -> tuple[Fraction, ...] | None:
    """
    Solve W lambda = point with sum(lambda) = 1.

    Raises:
        DimensionMismatch: the point does not have w.ambient coordinates
        DegenerateSimplex: the vertices are affinely dependent

    Returns:
        tuple[Fraction, ...] | None: the coordinates, or None when the point is
            off the affine hull of the simplex
    """
    if len(point) != w.ambient:
        raise DimensionMismatch(
            f"point has {len(point)} coordinates, simplex lives in {w.ambient}"
        )
    if not is_affinely_independent(w):
        raise DegenerateSimplex(f"vertices of {w} are affinely dependent")
    vectors = w.vectors()
    system = sympy.Matrix(
        [[_to_sympy(vector[k]) for vector in vectors] for k in range(w.ambient)]
        + [[sympy.Integer(1)] * w.size]
    )
    rhs = sympy.Matrix([_to_sympy(Fraction(value)) for value in point] + [1])
    try:
        solution, _ = system.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    return tuple(_from_sympy(value) for value in solution)


def simplex_volume(w: SimplexVertexMatrix) -> Fraction:
    """
    Volume of the simplex relative to the coordinate face of its dimension.

    Raises:
        DegenerateSimplex: the vertices are affinely dependent, or the simplex
            is not contained in a coordinate face of its own dimension
    """
    d = w.size - 1
    if d < 0:
        raise DegenerateSimplex("a simplex needs at least one vertex")
    if d == 0:
        return Fraction(1)
    edges = _edge_matrix(w.vectors())
    gram = (edges.T * edges).det()
    if gram == 0:
        raise DegenerateSimplex(f"vertices of {w} are affinely dependent")
    volume = sympy.sqrt(sympy.Rational(gram) / (d + 1))
    if not volume.is_Rational:
        raise DegenerateSimplex(
            f"{w} does not lie in a coordinate face of dimension {d}"
        )
    return _from_sympy(volume)
