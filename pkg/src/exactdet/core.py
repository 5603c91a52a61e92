"""Exact scalars, dense matrices, and index-set plumbing.

Everything in this package computes over arbitrary-precision rationals
(``fractions.Fraction``), so every algebraic identity holds as an exact-zero
residual rather than a small float.  All public indices are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Fraction

ScalarLike = Union[int, str, Fraction]

_SCALAR_RE = re.compile(r"[+-]?[0-9]+(?:/[+-]?[0-9]+)?\Z")


def parse_scalar(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into a canonical Fraction.

    The grammar is strict: optional sign, digits, optionally ``/`` and a
    signed nonzero integer.  No whitespace, no decimals, no floats.
    """
    if not isinstance(text, str) or not _SCALAR_RE.match(text):
        raise ValueError(f"malformed scalar {text!r}")
    num, _, den = text.partition("/")
    if den:
        d = int(den)
        if d == 0:
            raise ValueError(f"zero denominator in scalar {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(num))


def format_scalar(value: Fraction) -> str:
    """Canonical text form: ``p`` for integers, ``p/q`` otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, scalar text, or Fraction. Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ValueError(f"not a scalar: {value!r}")


def as_vector(values: Iterable[ScalarLike]) -> tuple[Fraction, ...]:
    return tuple(scalar(v) for v in values)


def index_set(indices: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a strictly increasing tuple of positive 1-based indices."""
    out = tuple(sorted(indices))
    for x in out:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"index sets hold positive integers, got {x!r}")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValueError(f"duplicate index {a} in index set")
    return out


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions with 1-based public indexing.

    Degenerate shapes (0 rows and/or 0 columns) are legal values; they arise
    as complementary minors and as the empty block in column augmentation.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[ScalarLike]], cols: int | None = None
    ) -> "Matrix":
        entries = tuple(tuple(scalar(v) for v in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(
            n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> Fraction:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"index ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i - 1][j - 1]

    def row_values(self, i: int) -> tuple[Fraction, ...]:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row {i} out of range for {self.rows}x{self.cols}")
        return self.entries[i - 1]

    def column_values(self, j: int) -> tuple[Fraction, ...]:
        if not 1 <= j <= self.cols:
            raise IndexError(f"column {j} out of range for {self.rows}x{self.cols}")
        return tuple(row[j - 1] for row in self.entries)

    def transpose(self) -> "Matrix":
        entries = tuple(
            tuple(row[j] for row in self.entries) for j in range(self.cols)
        )
        return Matrix(self.cols, self.rows, entries)

    def scale(self, factor: ScalarLike) -> "Matrix":
        c = scalar(factor)
        return Matrix(
            self.rows, self.cols, tuple(tuple(c * v for v in row) for row in self.entries)
        )

    def __str__(self) -> str:
        body = "; ".join(" ".join(format_scalar(v) for v in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def submatrix_delete(
    matrix: Matrix, rows: Iterable[int], cols: Iterable[int]
) -> Matrix:
    """Delete the listed 1-based rows and columns, keeping original order.

    Deleting nothing returns the matrix unchanged; deleting everything yields
    a 0x0 matrix, whose determinant is 1 by convention.
    """
    drop_rows = index_set(rows)
    drop_cols = index_set(cols)
    if drop_rows and drop_rows[-1] > matrix.rows:
        raise IndexError(f"row {drop_rows[-1]} out of range for {matrix.rows}x{matrix.cols}")
    if drop_cols and drop_cols[-1] > matrix.cols:
        raise IndexError(f"column {drop_cols[-1]} out of range for {matrix.rows}x{matrix.cols}")
    rset = set(drop_rows)
    cset = set(drop_cols)
    entries = tuple(
        tuple(v for j, v in enumerate(row, start=1) if j not in cset)
        for i, row in enumerate(matrix.entries, start=1)
        if i not in rset
    )
    return Matrix(matrix.rows - len(drop_rows), matrix.cols - len(drop_cols), entries)


def augment_columns(
    matrix: Matrix, vectors: Sequence[Sequence[ScalarLike]]
) -> Matrix:
    """Append column vectors on the right, in the given order."""
    vecs = [as_vector(v) for v in vectors]
    for v in vecs:
        if len(v) != matrix.rows:
            raise ValueError(
                f"column of length {len(v)} cannot augment a {matrix.rows}-row matrix"
            )
    entries = tuple(
        row + tuple(v[i] for v in vecs) for i, row in enumerate(matrix.entries)
    )
    return Matrix(matrix.rows, matrix.cols + len(vecs), entries)
