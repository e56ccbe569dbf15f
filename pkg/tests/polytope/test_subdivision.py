from math import comb

import pytest

from core.errors import AlreadySimplicial, DimensionMismatch, OutOfRange
from polytope.label import (
    PolytopeLabel,
    ZeroIndexList,
    facets_avoiding,
    is_simplicial,
    lk_label,
    vertices_of,
)
from polytope.subdivision import (
    decompose,
    extend_with_zeros,
    subdivision_count,
    vmatrix,
)
from polytope.vertex import SimplexVertex, SimplexVertexMatrix

from polytope_samples import random_labels


def M(i, j, m=5):
    return SimplexVertex.midpoint(i, j, m)


def e(i, m=5):
    return SimplexVertex.unit(i, m)


class TestDecompose:
    def test_split_on_first_indices(self):
        child1, child2, split = decompose(lk_label(2, 5))
        assert child1 == PolytopeLabel((2,), (3, 4, 5), 5)
        assert child2 == PolytopeLabel((1, 2), (4, 5), 5)
        assert split == M(1, 3)

    def test_smallest_split(self):
        child1, child2, split = decompose(PolytopeLabel((1,), (2, 3), 3))
        assert child1 == PolytopeLabel((), (2, 3), 3)
        assert child2 == PolytopeLabel((1,), (3,), 3)
        assert split == M(1, 2, 3)

    def test_children_are_the_facets_avoiding_the_split(self):
        for label in random_labels(30, seed=5):
            if is_simplicial(label):
                continue
            child1, child2, split = decompose(label)
            assert facets_avoiding(label, split) == [child1, child2]

    @pytest.mark.parametrize("label", [lk_label(0, 3), PolytopeLabel((1, 2), (3,), 3)])
    def test_simplicial_refused(self, label):
        with pytest.raises(AlreadySimplicial):
            decompose(label)


class TestVmatrix:
    def test_two_five_subdivision(self):
        expected = [
            (M(1, 3), M(2, 3), e(3), e(4), e(5)),
            (M(1, 3), M(2, 3), M(2, 4), e(4), e(5)),
            (M(1, 3), M(2, 3), M(2, 4), e(5), M(2, 5)),
            (M(1, 3), M(1, 4), M(2, 4), e(4), e(5)),
            (M(1, 3), M(1, 4), M(2, 4), e(5), M(2, 5)),
            (M(1, 3), M(1, 4), e(5), M(1, 5), M(2, 5)),
        ]
        simplices = vmatrix(lk_label(2, 5))
        assert [simplex.columns for simplex in simplices] == expected
        assert {simplex.vertex_set() for simplex in simplices} == {
            frozenset(columns) for columns in expected
        }

    def test_simplicial_label_is_its_own_simplex(self):
        simplices = vmatrix(lk_label(0, 3))
        assert len(simplices) == 1
        assert str(simplices[0]) == "{e1, e2, e3}"

    def test_one_two_split(self):
        simplices = vmatrix(PolytopeLabel((1,), (2, 3), 3))
        assert [str(simplex) for simplex in simplices] == [
            "{M(1,2), e2, e3}",
            "{M(1,2), e3, M(1,3)}",
        ]

    def test_counts_for_lk_labels(self):
        for m in range(2, 11):
            for k in range(m):
                simplices = vmatrix(lk_label(k, m))
                assert len(simplices) == comb(m - 1, k) == subdivision_count(k, m)
                assert all(simplex.size == m for simplex in simplices)

    def test_vertices_come_from_the_polytope(self):
        for label in random_labels(30, seed=11):
            allowed = set(vertices_of(label))
            simplices = vmatrix(label)
            assert len(simplices) == comb(label.s + label.t - 1, label.s)
            for simplex in simplices:
                assert simplex.vertex_set() <= allowed
                assert simplex.size == label.s + label.t

    def test_deterministic(self):
        label = PolytopeLabel((2, 5), (1, 3, 4), 6)
        assert vmatrix(label) == vmatrix(label)


class TestExtendWithZeros:
    def test_cone_with_zero_indices(self):
        simplices = vmatrix(PolytopeLabel((1,), (3,), 4))
        extended = extend_with_zeros(simplices, ZeroIndexList((2, 4), 4))
        assert [str(simplex) for simplex in extended] == ["{e3, M(1,3), e2, e4}"]

    def test_single_vertex(self):
        simplex = SimplexVertexMatrix.of([SimplexVertex.unit(2, 2)], 2)
        extended = extend_with_zeros([simplex], ZeroIndexList((1,), 2))
        assert extended[0].columns == (
            SimplexVertex.unit(2, 2),
            SimplexVertex.unit(1, 2),
        )

    def test_no_zeros(self):
        simplices = vmatrix(lk_label(1, 3))
        assert extend_with_zeros(simplices, ZeroIndexList((), 3)) == simplices

    def test_overlap(self):
        simplices = vmatrix(PolytopeLabel((1,), (3,), 4))
        with pytest.raises(DimensionMismatch):
            extend_with_zeros(simplices, ZeroIndexList((3,), 4))

    def test_ambient_mismatch(self):
        simplices = vmatrix(PolytopeLabel((1,), (3,), 4))
        with pytest.raises(DimensionMismatch):
            extend_with_zeros(simplices, ZeroIndexList((2,), 5))


class TestSubdivisionCount:
    def test_values(self):
        assert subdivision_count(2, 5) == 6
        assert subdivision_count(0, 4) == 1

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            subdivision_count(5, 5)
