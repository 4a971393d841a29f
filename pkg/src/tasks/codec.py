"""
Block-level encoding and decoding.

A block B is sent as its determinant d plus the eight entries other than the
center b5. The receiver multiplies the disclosed entries by Q^n, leaving the
center's contribution out of the middle column (the partial E table), and
recovers b5 from the linear equation det(Q^n B) = d, which holds because
det(Q^n) = 1.
"""

from __future__ import annotations

import logging
from dataclasses import astuple, dataclass
from typing import NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, StrictInt, field_validator

from src.errors import (
    CenterRangeError,
    CodecError,
    MinorConditionError,
    NonIntegerSolutionError,
    SingularSystemError,
)
from src.tasks.alphabet import MODULUS, AlphabetKey
from src.tasks.blocking import Block
from src.tasks.padovan import Matrix3, det3, minor22

log = logging.getLogger(__name__)

DISCLOSED_LABELS = (1, 2, 3, 4, 6, 7, 8, 9)


class CodedRow(BaseModel):
    """One row of the coded matrix: d followed by b1, b2, b3, b4, b6, b7, b8, b9."""

    model_config = ConfigDict(frozen=True)

    d: StrictInt
    disclosed: Tuple[StrictInt, ...]

    @field_validator("disclosed")
    @classmethod
    def _check_disclosed(cls, value):
        if len(value) != len(DISCLOSED_LABELS):
            raise ValueError(f"expected {len(DISCLOSED_LABELS)} disclosed entries, got {len(value)}")
        for v in value:
            if not 0 <= v < MODULUS:
                raise ValueError(f"disclosed entry {v} is outside [0, {MODULUS - 1}]")
        return value

    def label(self, k: int) -> int:
        """Return disclosed entry b_k; k = 5 is never disclosed."""
        if k not in DISCLOSED_LABELS:
            raise IndexError(f"b{k} is not a disclosed entry")
        return self.disclosed[DISCLOSED_LABELS.index(k)]

    def with_center(self, center: int) -> Matrix3:
        b = self.label
        return Matrix3(((b(1), b(2), b(3)), (b(4), center, b(6)), (b(7), b(8), b(9))))

    def minor(self) -> int:
        """The (2,2) minor b1 b9 - b3 b7, which never involves the center."""
        return minor22(self.with_center(0))

    def fields(self) -> Tuple[int, ...]:
        return (self.d,) + tuple(self.disclosed)


@dataclass(frozen=True)
class PartialE:
    """Q^n B with the unknown center left out of e2, e5 and e8."""

    e1: int
    e2: int
    e3: int
    e4: int
    e5: int
    e6: int
    e7: int
    e8: int
    e9: int

    def as_tuple(self) -> Tuple[int, ...]:
        return astuple(self)


class LinearEquation(NamedTuple):
    """d = coefficient * x + constant."""

    coefficient: int
    constant: int

    def solve(self, d: int) -> int:
        if self.coefficient == 0:
            raise SingularSystemError("The center coefficient is zero; the block cannot be decoded")
        x, remainder = divmod(d - self.constant, self.coefficient)
        if remainder:
            raise NonIntegerSolutionError(
                f"{d} = {self.coefficient}x + {self.constant} has no integer solution; the row is corrupted"
            )
        return x


def encode_block(block: Block) -> CodedRow:
    """
    Encode a block as its determinant and eight disclosed entries.

    Args:
        block: Block whose (2,2) minor is nonzero

    Returns:
        CodedRow for the block
    """
    if minor22(block.cells) == 0:
        raise MinorConditionError(f"Block {block.index} has a zero (2,2) minor and cannot be encoded")
    cells = block.cells
    return CodedRow(d=det3(cells), disclosed=tuple(cells.label(k) for k in DISCLOSED_LABELS))


def padding_row(key: AlphabetKey) -> CodedRow:
    """The coded row of a block made only of padding."""
    return CodedRow(d=0, disclosed=(key.padding_value,) * len(DISCLOSED_LABELS))


def partial_e(qn: Matrix3, row: CodedRow) -> PartialE:
    """Multiply Q^n by the disclosed part of the block."""
    q = qn.label
    b = row.label
    return PartialE(
        e1=q(1) * b(1) + q(2) * b(4) + q(3) * b(7),
        e2=q(1) * b(2) + q(3) * b(8),
        e3=q(1) * b(3) + q(2) * b(6) + q(3) * b(9),
        e4=q(4) * b(1) + q(5) * b(4) + q(6) * b(7),
        e5=q(4) * b(2) + q(6) * b(8),
        e6=q(4) * b(3) + q(5) * b(6) + q(6) * b(9),
        e7=q(7) * b(1) + q(8) * b(4) + q(9) * b(7),
        e8=q(7) * b(2) + q(9) * b(8),
        e9=q(7) * b(3) + q(8) * b(6) + q(9) * b(9),
    )


def decode_equation(qn: Matrix3, e: PartialE) -> LinearEquation:
    """
    Expand det(Q^n B) along its middle column as a linear function of b5.

    Returns:
        LinearEquation with d = coefficient * b5 + constant
    """
    q = qn.label
    first = e.e6 * e.e7 - e.e4 * e.e9
    second = e.e1 * e.e9 - e.e7 * e.e3
    third = e.e3 * e.e4 - e.e1 * e.e6
    coefficient = q(2) * first + q(5) * second + q(8) * third
    constant = e.e2 * first + e.e5 * second + e.e8 * third
    return LinearEquation(coefficient, constant)


def solve_center(qn: Matrix3, e: PartialE, d: int) -> int:
    """Solve the decode equation for the hidden center entry."""
    return decode_equation(qn, e).solve(d)


def decode_block(
    row: CodedRow,
    qn: Matrix3,
    index: int = 1,
    padding_value: Optional[int] = None,
) -> Block:
    """
    Rebuild a block from its coded row.

    Args:
        row: Coded row to decode
        qn: Q^n for the key the row was encoded with
        index: Tile index given to the returned block
        padding_value: When set, a row with d = 0 and eight entries equal to
            this value decodes to an all-padding block

    Returns:
        Block with the recovered center
    """
    if padding_value is not None and row.d == 0 and all(v == padding_value for v in row.disclosed):
        center = padding_value
    else:
        try:
            center = solve_center(qn, partial_e(qn, row), row.d)
        except CodecError as e:
            log.debug("Block %d failed to decode: %s", index, e)
            raise
    if not 0 <= center < MODULUS:
        log.debug("Block %d solved to center %d, outside the alphabet", index, center)
        raise CenterRangeError(f"Recovered center {center} of block {index} is outside [0, {MODULUS - 1}]")
    return Block(index=index, cells=row.with_center(center))


def oracle_center(row: CodedRow) -> int:
    """Solve for the center straight from the cofactor expansion of B."""
    return LinearEquation(row.minor(), det3(row.with_center(0))).solve(row.d)
