from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence

from core.errors import (
    AsymmetricMatrix,
    DimensionMismatch,
    InvalidPermutation,
    NonpositiveScale,
    OrderTooSmall,
)
from matrix.rational import ONE, ZERO, sign, to_rational

if TYPE_CHECKING:
    from polytope.vertex import SimplexVertexMatrix

Vector = tuple[Fraction, ...]


class SymmetricMatrix:
    """
    Immutable n x n symmetric matrix of exact rationals.

    order : int : the size n, at least 1
    rows : tuple[tuple[Fraction, ...], ...] : entries, rows[i][j] == rows[j][i]
    """

    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        """
        Build a matrix from nested rows. Entries may be ints, Fractions or
        rational strings; floats are refused.

        Args:
            rows (Iterable[Iterable]): the n rows of the matrix

        Raises:
            OrderTooSmall: no rows at all
            DimensionMismatch: the data is not square
            AsymmetricMatrix: some entry differs from its mirror image
        """
        grid = tuple(tuple(to_rational(value) for value in row) for row in rows)
        n = len(grid)
        if n == 0:
            raise OrderTooSmall("a matrix needs at least one row")
        for i, row in enumerate(grid):
            if len(row) != n:
                raise DimensionMismatch(
                    f"row {i + 1} has {len(row)} entries, expected {n}"
                )
        for i in range(n):
            for j in range(i + 1, n):
                if grid[i][j] != grid[j][i]:
                    raise AsymmetricMatrix(
                        f"entry ({i + 1},{j + 1}) = {grid[i][j]} differs from "
                        f"entry ({j + 1},{i + 1}) = {grid[j][i]}"
                    )
        self._rows = grid
        self._hash = None

    @classmethod
    def _trusted(cls, grid: tuple[tuple[Fraction, ...], ...]) -> "SymmetricMatrix":
        # Skips validation for grids built symmetric by construction.
        matrix = cls.__new__(cls)
        matrix._rows = grid
        matrix._hash = None
        return matrix

    @classmethod
    def from_upper(cls, n: int, entry) -> "SymmetricMatrix":
        """
        Build a matrix from a function giving the (i, j) entry for i <= j.
        """
        upper = [[to_rational(entry(i, j)) for j in range(i, n)] for i in range(n)]
        grid = tuple(
            tuple(upper[i][j - i] if j >= i else upper[j][i - j] for j in range(n))
            for i in range(n)
        )
        return cls._trusted(grid)

    @classmethod
    def identity(cls, n: int) -> "SymmetricMatrix":
        return cls.from_upper(n, lambda i, j: ONE if i == j else ZERO)

    @classmethod
    def zeros(cls, n: int) -> "SymmetricMatrix":
        return cls.from_upper(n, lambda i, j: ZERO)

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def diagonal(self) -> Vector:
        return tuple(self._rows[i][i] for i in range(self.order))

    def __add__(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        if other.order != self.order:
            raise DimensionMismatch(
                f"cannot add matrices of order {self.order} and {other.order}"
            )
        return SymmetricMatrix._trusted(
            tuple(
                tuple(a + b for a, b in zip(row, other_row))
                for row, other_row in zip(self._rows, other.rows)
            )
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(str(value) for value in row) + "]" for row in self._rows
        )
        return f"SymmetricMatrix([{body}])"

    def __reduce__(self):
        return (SymmetricMatrix._trusted, (self._rows,))


@dataclass(frozen=True)
class PartitionedView:
    """
    The block split of a matrix of order n >= 2 into its corner, the rest of
    its first row, and the trailing principal submatrix.
    """

    alpha11: Fraction
    alpha: Vector
    a2: SymmetricMatrix


@dataclass(frozen=True)
class NormalizedForm:
    """
    The first-row normalization of a matrix A of order n >= 2.

    d_diag : positive scales d_i, 1 where the first-row entry is zero and
        1/|alpha_i| otherwise
    a_hat : diag(1, D) A diag(1, D)
    sign_vector : signs of the first row without its head, values in {-1, 0, 1}
    b_matrix : alpha11 * (D A2 D) - sign_vector sign_vector^T
    """

    d_diag: Vector
    a_hat: SymmetricMatrix
    sign_vector: tuple[int, ...]
    b_matrix: SymmetricMatrix

    @property
    def alpha11(self) -> Fraction:
        return self.a_hat[0, 0]

    @property
    def scaled_tail(self) -> SymmetricMatrix:
        """D A2 D, the trailing block of a_hat."""
        return partition(self.a_hat).a2

    def has_negative_sign(self) -> bool:
        return any(beta < 0 for beta in self.sign_vector)


def _require_order_two(a: SymmetricMatrix):
    if a.order < 2:
        raise OrderTooSmall(f"operation needs order >= 2, got order {a.order}")


def partition(a: SymmetricMatrix) -> PartitionedView:
    """
    Split a into (alpha11, alpha, A2).

    Raises:
        OrderTooSmall: order of a is below 2
    """
    _require_order_two(a)
    rows = a.rows
    return PartitionedView(
        alpha11=rows[0][0],
        alpha=tuple(rows[0][1:]),
        a2=SymmetricMatrix._trusted(tuple(tuple(row[1:]) for row in rows[1:])),
    )


def reassemble(view: PartitionedView) -> SymmetricMatrix:
    """
    Inverse of partition.
    """
    head = (view.alpha11,) + tuple(view.alpha)
    tail = tuple(
        (view.alpha[i],) + tuple(view.a2.rows[i]) for i in range(view.a2.order)
    )
    return SymmetricMatrix._trusted((head,) + tail)


def normalize(a: SymmetricMatrix) -> NormalizedForm:
    """
    Scale the tail of a so that its first row only holds -1, 0, 1 off the corner
    and build the B matrix used by the projection.

    Raises:
        OrderTooSmall: order of a is below 2
    """
    view = partition(a)
    d_diag = tuple(ONE if value == 0 else ONE / abs(value) for value in view.alpha)
    a_hat = scale_diag_conjugate(a, (ONE,) + d_diag)
    signs = tuple(sign(value) for value in view.alpha)
    scaled = partition(a_hat).a2
    m = a.order - 1
    b_matrix = SymmetricMatrix.from_upper(
        m, lambda i, j: view.alpha11 * scaled[i, j] - signs[i] * signs[j]
    )
    return NormalizedForm(
        d_diag=d_diag, a_hat=a_hat, sign_vector=signs, b_matrix=b_matrix
    )


def congruence(b: SymmetricMatrix, w: "SimplexVertexMatrix") -> SymmetricMatrix:
    """
    Compute W^T B W for the vertex columns of w.

    Raises:
        DimensionMismatch: the vertices of w do not have b.order coordinates
    """
    columns = w.vectors()
    if w.ambient != b.order:
        raise DimensionMismatch(
            f"vertex matrix has {w.ambient} rows, matrix has order {b.order}"
        )
    images = [matrix_vector(b, column) for column in columns]
    return SymmetricMatrix.from_upper(
        len(columns), lambda i, j: dot(columns[i], images[j])
    )


def is_entrywise_nonnegative(m: SymmetricMatrix) -> bool:
    return all(value >= 0 for row in m.rows for value in row)


def matrix_vector(a: SymmetricMatrix, x: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, x) for row in a.rows)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    total = ZERO
    for u, v in zip(x, y):
        if u and v:
            total += u * v
    return total


def evaluate_quadratic(a: SymmetricMatrix, x: Sequence) -> Fraction:
    """
    Exact value of x^T a x.

    Raises:
        DimensionMismatch: len(x) differs from the order of a
    """
    if len(x) != a.order:
        raise DimensionMismatch(
            f"vector has {len(x)} entries, matrix has order {a.order}"
        )
    vector = tuple(to_rational(value) for value in x)
    return dot(vector, matrix_vector(a, vector))


def permute_conjugate(a: SymmetricMatrix, perm: Sequence[int]) -> SymmetricMatrix:
    """
    Return P^T a P for the permutation matrix P sending e_j to e_perm[j].

    perm lists 1-based images, so (2, 1) swaps the first two coordinates. The
    result satisfies x^T (P^T a P) x = (Px)^T a (Px).

    Raises:
        InvalidPermutation: perm is not a permutation of 1..n
    """
    n = a.order
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{list(perm)} is not a permutation of 1..{n}")
    index = [p - 1 for p in perm]
    return SymmetricMatrix.from_upper(n, lambda i, j: a[index[i], index[j]])


def apply_permutation(perm: Sequence[int], x: Sequence[Fraction]) -> Vector:
    """
    Compute Px, the vector with x[j] moved to position perm[j].
    """
    result = [ZERO] * len(x)
    for j, p in enumerate(perm):
        result[p - 1] = x[j]
    return tuple(result)


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inverse = [0] * len(perm)
    for j, p in enumerate(perm):
        inverse[p - 1] = j + 1
    return tuple(inverse)


def scale_diag_conjugate(a: SymmetricMatrix, d: Sequence) -> SymmetricMatrix:
    """
    Return diag(d) a diag(d).

    Raises:
        DimensionMismatch: len(d) differs from the order of a
        NonpositiveScale: some d_i is not strictly positive
    """
    scales = tuple(to_rational(value) for value in d)
    if len(scales) != a.order:
        raise DimensionMismatch(
            f"{len(scales)} scales given for a matrix of order {a.order}"
        )
    for i, value in enumerate(scales):
        if value <= 0:
            raise NonpositiveScale(f"scale {i + 1} is {value}, must be positive")
    return SymmetricMatrix.from_upper(
        a.order, lambda i, j: scales[i] * a[i, j] * scales[j]
    )


def symmetrize(rows: Sequence[Sequence]) -> SymmetricMatrix:
    """
    Replace a square array M by (M + M^T) / 2. Only used on explicit request.

    Raises:
        DimensionMismatch: the data is not square
    """
    grid = [[to_rational(value) for value in row] for row in rows]
    n = len(grid)
    if n == 0:
        raise OrderTooSmall("a matrix needs at least one row")
    for i, row in enumerate(grid):
        if len(row) != n:
            raise DimensionMismatch(f"row {i + 1} has {len(row)} entries, expected {n}")
    return SymmetricMatrix.from_upper(n, lambda i, j: (grid[i][j] + grid[j][i]) / 2)
