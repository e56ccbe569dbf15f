from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from core.errors import LabelParseError, NoNegativeSign, OutOfRange
from polytope.vertex import SimplexVertex


@dataclass(frozen=True)
class PolytopeLabel:
    """
    The polytope [[a_1..a_s],[b_1..b_t]]_m: points y of the standard simplex
    supported on a u b with sum(y_a) - sum(y_b) <= 0.

    a_list : strictly increasing indices with positive sign
    b_list : strictly increasing indices with negative sign, never empty
    ambient : m, the dimension of the enclosing standard simplex
    """

    a_list: tuple[int, ...]
    b_list: tuple[int, ...]
    ambient: int

    def __post_init__(self):
        if self.ambient < 1:
            raise OutOfRange(f"ambient dimension must be positive, got {self.ambient}")
        if not self.b_list:
            raise OutOfRange("the negative index list must not be empty")
        for name, values in (("a", self.a_list), ("b", self.b_list)):
            for previous, current in zip(values, values[1:]):
                if current <= previous:
                    raise OutOfRange(f"{name} indices must be strictly increasing")
            for index in values:
                if not 1 <= index <= self.ambient:
                    raise OutOfRange(f"index {index} outside 1..{self.ambient}")
        shared = set(self.a_list) & set(self.b_list)
        if shared:
            raise OutOfRange(f"indices {sorted(shared)} appear in both lists")

    @property
    def s(self) -> int:
        return len(self.a_list)

    @property
    def t(self) -> int:
        return len(self.b_list)

    def __str__(self) -> str:
        return format_label(self)


@dataclass(frozen=True)
class ZeroIndexList:
    """
    Indices c_1..c_r whose sign is zero; together with a label's lists they
    cover 1..m exactly.
    """

    c_list: tuple[int, ...]
    ambient: int

    @property
    def r(self) -> int:
        return len(self.c_list)


def lk_label(k: int, m: int) -> PolytopeLabel:
    """
    The label [[1..k],[k+1..m]]_m.

    Raises:
        OutOfRange: unless m >= 2 and 0 <= k <= m - 1
    """
    if m < 2 or not 0 <= k <= m - 1:
        raise OutOfRange(f"need m >= 2 and 0 <= k <= m-1, got k={k}, m={m}")
    return PolytopeLabel(tuple(range(1, k + 1)), tuple(range(k + 1, m + 1)), m)


def sign_vector_to_label(beta: Sequence[int]) -> tuple[PolytopeLabel, ZeroIndexList]:
    """
    Separate the +1, -1 and 0 positions of a sign vector.

    Raises:
        NoNegativeSign: beta holds no -1
    """
    a_list = tuple(i + 1 for i, value in enumerate(beta) if value > 0)
    b_list = tuple(i + 1 for i, value in enumerate(beta) if value < 0)
    c_list = tuple(i + 1 for i, value in enumerate(beta) if value == 0)
    if not b_list:
        raise NoNegativeSign(f"sign vector {tuple(beta)} has no negative entry")
    m = len(beta)
    return PolytopeLabel(a_list, b_list, m), ZeroIndexList(c_list, m)


def dimension(label: PolytopeLabel) -> int:
    return label.s + label.t - 1


def is_simplicial(label: PolytopeLabel) -> bool:
    return label.s == 0 or label.t == 1


def vertices_of(label: PolytopeLabel) -> list[SimplexVertex]:
    """
    All vertices of the label's polytope: e_b for every b, then the midpoints
    M_{a,b} in (a, b) lexicographic order. There are (s + 1) * t of them.
    """
    m = label.ambient
    units = [SimplexVertex.unit(b, m) for b in label.b_list]
    midpoints = [
        SimplexVertex.midpoint(a, b, m) for a in label.a_list for b in label.b_list
    ]
    return units + midpoints


def facets_of(label: PolytopeLabel) -> list[PolytopeLabel]:
    """
    The facets obtained by deleting one index from either list. Deleting the
    last negative index leaves an empty set, so that facet is skipped. The
    remaining facet, where the cutting hyperplane holds with equality, is
    given by cutting_facet_vertices.
    """
    facets = []
    for a in label.a_list:
        kept = tuple(x for x in label.a_list if x != a)
        facets.append(PolytopeLabel(kept, label.b_list, label.ambient))
    if label.t > 1:
        for b in label.b_list:
            kept = tuple(x for x in label.b_list if x != b)
            facets.append(PolytopeLabel(label.a_list, kept, label.ambient))
    return facets


def cutting_facet_vertices(label: PolytopeLabel) -> list[SimplexVertex]:
    return [v for v in vertices_of(label) if v.is_midpoint]


def facets_avoiding(label: PolytopeLabel, vertex: SimplexVertex) -> list[PolytopeLabel]:
    """
    Deletion facets whose vertex sets do not contain the given vertex.
    """
    return [facet for facet in facets_of(label) if vertex not in vertices_of(facet)]


_LABEL = re.compile(
    r"^\[\[(?P<a>[^\[\]]*)\],\[(?P<b>[^\[\]]*)\]\]_(?P<m>\d+)$", re.ASCII
)
_INDEX = re.compile(r"\d+", re.ASCII)


def _parse_indices(text: str, source: str) -> list[int]:
    if not text:
        return []
    indices = []
    for token in text.split(","):
        if not _INDEX.fullmatch(token):
            raise LabelParseError(f"malformed index '{token}' in '{source}'")
        indices.append(int(token))
    return indices


def parse_label(text: str) -> PolytopeLabel:
    """
    Parse the textual form "[[1,2],[3,4,5]]_5". Whitespace is ignored and the
    index lists are stored sorted.

    Raises:
        LabelParseError: malformed text, repeated index, index out of range or
            an empty negative list
    """
    compact = "".join(text.split())
    match = _LABEL.match(compact)
    if match is None:
        raise LabelParseError(f"malformed label '{text}', expected [[a,...],[b,...]]_m")
    a_list = _parse_indices(match["a"], text)
    b_list = _parse_indices(match["b"], text)
    m = int(match["m"])
    everything = a_list + b_list
    if len(set(everything)) != len(everything):
        raise LabelParseError(f"duplicate index in '{text}'")
    for index in everything:
        if not 1 <= index <= m:
            raise LabelParseError(f"index {index} out of range 1..{m} in '{text}'")
    if not b_list:
        raise LabelParseError(f"the second list of '{text}' must not be empty")
    return PolytopeLabel(tuple(sorted(a_list)), tuple(sorted(b_list)), m)


def format_label(label: PolytopeLabel) -> str:
    a_text = ",".join(str(a) for a in label.a_list)
    b_text = ",".join(str(b) for b in label.b_list)
    return f"[[{a_text}],[{b_text}]]_{label.ambient}"
