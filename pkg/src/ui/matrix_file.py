"""
The matrix file format: the order n on the first line, then n lines of n
whitespace-separated rationals, each an integer or "p/q".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from core.errors import MatrixFileError
from matrix.rational import format_rational, parse_rational
from matrix.symmetric_matrix import SymmetricMatrix, symmetrize


def _content_lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def parse_matrix_text(
    text: str, accept_decimal: bool = False, repair_asymmetry: bool = False
) -> SymmetricMatrix:
    """
    Parse the matrix file format.

    Args:
        text (str): file content
        accept_decimal (bool, optional): convert finite decimals exactly.
            Defaults to False.
        repair_asymmetry (bool, optional): replace M by (M + M^T) / 2 instead
            of rejecting an asymmetric matrix. Defaults to False.

    Raises:
        MatrixFileError: missing or malformed order line, wrong row or column
            count, malformed rational (RationalParseError)
        AsymmetricMatrix: entries differ from their mirror images

    Returns:
        SymmetricMatrix: the parsed matrix
    """
    lines = _content_lines(text)
    if not lines:
        raise MatrixFileError("matrix file is empty")
    header = lines[0]
    if not header.isdecimal() or not header.isascii() or int(header) < 1:
        raise MatrixFileError(f"first line must be a positive order, got '{header}'")
    n = int(header)
    rows = lines[1:]
    if len(rows) != n:
        raise MatrixFileError(f"expected {n} rows, found {len(rows)}")
    grid: list[list[Fraction]] = []
    for number, line in enumerate(rows, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixFileError(
                f"row {number} has {len(tokens)} entries, expected {n} "
                "(matrix is not square)"
            )
        grid.append([parse_rational(token, accept_decimal) for token in tokens])
    if repair_asymmetry:
        return symmetrize(grid)
    return SymmetricMatrix(grid)


def read_matrix_file(path: str, **options) -> SymmetricMatrix:
    """
    Read and parse a matrix file.

    Raises:
        MatrixFileError: unreadable file or malformed content
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as error:
        raise MatrixFileError(f"cannot read '{path}': {error.strerror}") from error
    return parse_matrix_text(text, **options)


def format_matrix(a: SymmetricMatrix) -> str:
    lines = [str(a.order)]
    lines.extend(" ".join(format_rational(value) for value in row) for row in a.rows)
    return "\n".join(lines) + "\n"


def write_matrix_file(a: SymmetricMatrix, path: str):
    """
    Raises:
        MatrixFileError: the path cannot be written
    """
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(format_matrix(a))
    except OSError as error:
        raise MatrixFileError(f"cannot write '{path}': {error.strerror}") from error


def parse_vector_text(text: str, accept_decimal: bool = False) -> tuple[Fraction, ...]:
    """
    Parse a witness: one line of whitespace-separated rationals.
    """
    lines = _content_lines(text)
    if len(lines) != 1:
        raise MatrixFileError(f"witness must be a single line, found {len(lines)}")
    return tuple(parse_rational(token, accept_decimal) for token in lines[0].split())


def read_vector_file(path: str, accept_decimal: bool = False) -> tuple[Fraction, ...]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as error:
        raise MatrixFileError(f"cannot read '{path}': {error.strerror}") from error
    return parse_vector_text(text, accept_decimal)


def format_vector(x: Sequence[Fraction]) -> str:
    return " ".join(format_rational(value) for value in x)

