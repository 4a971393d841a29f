"""
Exact integer arithmetic for the Padovan sequence and its Q-matrix.

Matrices are indexed 1-based and row-major, so that entry k of the flat
labelling (q1..q9 for powers of Q, b1..b9 for blocks) sits at
row (k - 1) // 3 + 1, column (k - 1) % 3 + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

Row = Tuple[int, int, int]


@dataclass(frozen=True)
class Matrix3:
    """A 3x3 matrix of unbounded signed integers."""

    rows: Tuple[Row, Row, Row]

    def __post_init__(self):
        if len(self.rows) != 3 or any(len(row) != 3 for row in self.rows):
            raise ValueError("Matrix3 needs exactly three rows of three entries")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Matrix3":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def from_labels(cls, values: Iterable[int]) -> "Matrix3":
        """Build a matrix from the nine row-major labels x1..x9."""
        flat = [int(v) for v in values]
        if len(flat) != 9:
            raise ValueError(f"Expected 9 entries, got {len(flat)}")
        return cls((tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9])))

    @classmethod
    def identity(cls) -> "Matrix3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def entry(self, row: int, col: int) -> int:
        """Return the entry at 1-based (row, col)."""
        if not (1 <= row <= 3 and 1 <= col <= 3):
            raise IndexError(f"Position ({row}, {col}) is outside a 3x3 matrix")
        return self.rows[row - 1][col - 1]

    def label(self, k: int) -> int:
        """Return the k-th row-major entry, k in 1..9."""
        if not 1 <= k <= 9:
            raise IndexError(f"Label {k} is outside 1..9")
        return self.rows[(k - 1) // 3][(k - 1) % 3]

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def __matmul__(self, other: "Matrix3") -> "Matrix3":
        a, b = self.rows, other.rows
        return Matrix3(tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
            for i in range(3)
        ))


def padovan(k: int) -> int:
    """
    Return the Padovan number P_k.

    Args:
        k: Non-negative index; P_0 = 0, P_1 = 0, P_2 = 1

    Returns:
        P_k, computed with the recurrence P_k = P_(k-2) + P_(k-3)
    """
    if k < 0:
        raise ValueError(f"Padovan index must be non-negative, got {k}")
    a, b, c = 0, 0, 1
    for _ in range(k):
        a, b, c = b, c, a + b
    return a


def q_matrix() -> Matrix3:
    """Return the Padovan Q-matrix."""
    return Matrix3(((0, 1, 0), (0, 0, 1), (1, 1, 0)))


def q_power(n: int) -> Matrix3:
    """
    Raise Q to the n-th power by repeated squaring.

    Args:
        n: Positive exponent

    Returns:
        Q^n as an exact integer matrix
    """
    if n < 1:
        raise ValueError(f"Q-matrix exponent must be positive, got {n}")
    result = Matrix3.identity()
    base = q_matrix()
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


def q_power_closed_form(n: int) -> Matrix3:
    """Return Q^n written out with Padovan numbers (cross-check for q_power)."""
    if n < 1:
        raise ValueError(f"Q-matrix exponent must be positive, got {n}")
    p = [padovan(k) for k in range(n - 1, n + 4)]
    # p[0] = P_(n-1) ... p[4] = P_(n+3)
    return Matrix3((
        (p[0], p[2], p[1]),
        (p[1], p[3], p[2]),
        (p[2], p[4], p[3]),
    ))


def det3(matrix: Matrix3) -> int:
    """Return the determinant by cofactor expansion along the first row."""
    (a, b, c), (d, e, f), (g, h, i) = matrix.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def minor22(matrix: Matrix3) -> int:
    """Return the minor of entry (2,2): b1*b9 - b3*b7."""
    return matrix.label(1) * matrix.label(9) - matrix.label(3) * matrix.label(7)
