"""Antisymmetric matrices, Pfaffians, and the determinant embedding.

The determinant of an even-order antisymmetric matrix is the perfect square
of its Pfaffian, and the corresponding minor recurrence

    comp(A; {1,2}, {1,2}) * det A = (M_12)^2

drives that perfect-square structure down to the order-2 base case.  A
general n x n determinant (and its first and double minors) also embeds as
an order-2n Pfaffian over the label list (1, ..., n, n*, ..., 2*, 1*) with
pair entries (i, j) = (i*, j*) = 0 and (i, j*) = -(j*, i) = a_ij; the
embedding here reproduces the minors with exact equality, no stray signs
(pinned against the determinant oracle in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import Matrix, ScalarLike, format_scalar, scalar
from .engines import complementary_minor, det_bareiss, first_minor


@dataclass(frozen=True)
class AntisymmetricMatrix:
    """Even-order skew-symmetric matrix stored as its strict upper triangle.

    Holding only the entries above the diagonal makes antisymmetry true by
    construction: the full matrix is derived as a_ji = -a_ij with a zero
    diagonal.
    """

    order: int
    upper: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0 or self.order % 2:
            raise ValueError(f"antisymmetric order must be even and >= 0, got {self.order}")
        expected = self.order * (self.order - 1) // 2
        if len(self.upper) != expected:
            raise ValueError(
                f"order {self.order} needs {expected} strict-upper entries, got {len(self.upper)}"
            )

    def _upper_index(self, i: int, j: int) -> int:
        # row-major strict upper triangle, i < j, 1-based
        return (i - 1) * self.order - i * (i - 1) // 2 + (j - i - 1)

    def entry(self, i: int, j: int) -> Fraction:
        """Entry at 1-based (i, j) of the materialized skew matrix."""
        if not (1 <= i <= self.order and 1 <= j <= self.order):
            raise IndexError(f"index ({i},{j}) out of range for order {self.order}")
        if i == j:
            return Fraction(0)
        if i < j:
            return self.upper[self._upper_index(i, j)]
        return -self.upper[self._upper_index(j, i)]

    def to_matrix(self) -> Matrix:
        n = self.order
        return Matrix(
            n, n, tuple(tuple(self.entry(i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
        )


def antisymmetric_from_upper(
    order: int, upper: Sequence[ScalarLike]
) -> AntisymmetricMatrix:
    """Build from the row-major strict upper triangle (a_12, a_13, ..., a_{n-1,n})."""
    return AntisymmetricMatrix(order, tuple(scalar(v) for v in upper))


def antisymmetric_from_matrix(matrix: Matrix) -> AntisymmetricMatrix:
    """Validate a full matrix as antisymmetric and strip it to its upper triangle.

    The error message names the first violating position: a nonzero diagonal
    entry (i, i), or the first (i, j) with a_ji != -a_ij scanning the upper
    triangle row by row.
    """
    if not matrix.is_square:
        raise ValueError(f"antisymmetric matrix must be square, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    if n % 2:
        raise ValueError(f"antisymmetric order must be even, got {n}")
    upper = []
    for i in range(1, n + 1):
        if matrix.at(i, i) != 0:
            raise ValueError(
                f"not antisymmetric: diagonal entry ({i},{i}) is "
                f"{format_scalar(matrix.at(i, i))}, expected 0"
            )
        for j in range(i + 1, n + 1):
            if matrix.at(j, i) != -matrix.at(i, j):
                raise ValueError(
                    f"not antisymmetric at ({i},{j}): a[{j},{i}] = "
                    f"{format_scalar(matrix.at(j, i))} but -a[{i},{j}] = "
                    f"{format_scalar(-matrix.at(i, j))}"
                )
            upper.append(matrix.at(i, j))
    return AntisymmetricMatrix(n, tuple(upper))


def _pfaffian_over(entry, labels: tuple[int, ...]) -> Fraction:
    """Pfaffian by expansion along the first remaining index.

    ``entry(i, j)`` supplies the skew pair value; ``labels`` is the ordered
    index subset still in play.  Memoization is keyed on that subset and
    lives only for the enclosing call.
    """
    memo: dict[tuple[int, ...], Fraction] = {}

    def expand(active: tuple[int, ...]) -> Fraction:
        if not active:
            return Fraction(1)
        cached = memo.get(active)
        if cached is not None:
            return cached
        head = active[0]
        rest = active[1:]
        total = Fraction(0)
        for pos, other in enumerate(rest, start=2):
            a = entry(head, other)
            if a != 0:
                sub = tuple(x for x in rest if x != other)
                term = a * expand(sub)
                total += term if pos % 2 == 0 else -term
        memo[active] = total
        return total

    return expand(labels)


def pfaffian(matrix: AntisymmetricMatrix) -> Fraction:
    """Pfaffian of an even-order antisymmetric matrix; Pf of order 0 is 1.

    Satisfies pfaffian(A)**2 == det(A) exactly.
    """
    return _pfaffian_over(matrix.entry, tuple(range(1, matrix.order + 1)))


def pfaffian_square_residual(matrix: AntisymmetricMatrix) -> Fraction:
    """pfaffian(A)^2 - det(A); identically zero."""
    return pfaffian(matrix) ** 2 - det_bareiss(matrix.to_matrix())


def jacobi_recurrence_residual(matrix: AntisymmetricMatrix) -> Fraction:
    """Residual of comp(A; {1,2}, {1,2}) * det A - (M_12)^2; identically zero.

    This is the two-by-two minor identity specialised to skew symmetry,
    where M_11 = M_22 = 0 and M_21 = -M_12.  The double-deleted minor is
    again antisymmetric (order reduced by 2), which is what makes det A a
    perfect square by recursion.
    """
    if matrix.order < 2:
        raise ValueError("recurrence needs order >= 2")
    full = matrix.to_matrix()
    m12 = first_minor(full, 1, 2)
    return complementary_minor(full, (1, 2), (1, 2)) * det_bareiss(full) - m12 * m12


def embedding_labels(n: int) -> tuple[str, ...]:
    """The ordered label list (1, ..., n, n*, ..., 2*, 1*) as strings."""
    if n < 0:
        raise ValueError("label count must be >= 0")
    return tuple(str(i) for i in range(1, n + 1)) + tuple(
        f"{i}*" for i in range(n, 0, -1)
    )


def _parse_label(label: str, n: int) -> tuple[int, bool]:
    text = label.strip()
    starred = text.endswith("*")
    if starred:
        text = text[:-1]
    if not text.isdigit():
        raise ValueError(f"malformed label {label!r}")
    idx = int(text)
    if not 1 <= idx <= n:
        raise ValueError(f"label {label!r} out of range for order {n}")
    return idx, starred


def determinant_embedding(matrix: Matrix) -> AntisymmetricMatrix:
    """Embed det A as the Pfaffian of an order-2n antisymmetric matrix.

    Positions follow ``embedding_labels(n)``; the pair entry of an unstarred
    i against a starred j* is a_ij, all like-kind pairs are zero.  Then
    pfaffian(result) == det(A) exactly.
    """
    if not matrix.is_square:
        raise ValueError(f"embedding requires a square matrix, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    order = 2 * n
    upper = []
    for p in range(1, order + 1):
        for q in range(p + 1, order + 1):
            if p <= n < q:
                upper.append(matrix.at(p, 2 * n + 1 - q))
            else:
                upper.append(Fraction(0))
    return AntisymmetricMatrix(order, tuple(upper))


def embedded_minor(matrix: Matrix, remove: Iterable[str]) -> Fraction:
    """Pfaffian of the embedding restricted by deleting the given labels.

    Legal removal sets and what the restricted Pfaffian reproduces:

    * ``{"i", "j*"}`` (i = j allowed)  ->  first_minor(A, i, j)
    * ``{"i", "j", "i*", "j*"}`` with i < j  ->  the minor deleting rows
      and columns {i, j}

    Equality is exact; there is no hidden sign.
    """
    if not matrix.is_square:
        raise ValueError(f"embedding requires a square matrix, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    parsed = {_parse_label(label, n) for label in remove}
    plain = sorted(idx for idx, starred in parsed if not starred)
    starred = sorted(idx for idx, star in parsed if star)
    if len(parsed) == 2:
        if len(plain) != 1 or len(starred) != 1:
            raise ValueError("a removal pair must hold one plain and one starred label")
    elif len(parsed) == 4:
        if len(plain) != 2 or plain != starred:
            raise ValueError(
                "a removal quadruple must pair two plain labels with their starred twins"
            )
    else:
        raise ValueError(f"removal set must have 2 or 4 labels, got {len(parsed)}")

    embedded = determinant_embedding(matrix)
    survivors = []
    for pos in range(1, 2 * n + 1):
        idx = pos if pos <= n else 2 * n + 1 - pos
        star = pos > n
        if (idx, star) not in parsed:
            survivors.append(pos)
    return _pfaffian_over(embedded.entry, tuple(survivors))
