"""
Message-level encoding and decoding built on the block codec.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from src.errors import PadovanError
from src.tasks.alphabet import key_for_block_count
from src.tasks.blocking import (
    ensure_minor_condition,
    is_padding_block,
    normalize_text,
    reassemble,
    split_blocks,
    symbols_to_text,
)
from src.tasks.codec import (
    CodedRow,
    LinearEquation,
    PartialE,
    decode_block,
    decode_equation,
    encode_block,
    padding_row,
    partial_e,
)
from src.tasks.padovan import q_power
from src.tasks.serializer import CodedMessage

log = logging.getLogger(__name__)


def encode_message(text: str) -> CodedMessage:
    """
    Encode plain text into a coded message.

    Args:
        text: Words of letters separated by single spaces

    Returns:
        CodedMessage with one row per block, in tile order
    """
    symbols = normalize_text(text)
    _, matrix = ensure_minor_condition(symbols)
    key = matrix.key
    rows = []
    for block in split_blocks(matrix):
        if is_padding_block(block, key):
            rows.append(padding_row(key))
        else:
            rows.append(encode_block(block))
    log.info("Encoded %d symbols into %d block(s) with n=%d", len(symbols), len(rows), key.n)
    return CodedMessage(m=matrix.m, rows=tuple(rows))


def decode_message(coded: CodedMessage) -> str:
    """
    Decode a coded message back to canonical text.

    Args:
        coded: CodedMessage with m^2 rows

    Returns:
        Uppercase words separated by single spaces
    """
    coded.check_shape()
    key = key_for_block_count(coded.m)
    qn = q_power(key.n)
    blocks = [
        decode_block(row, qn, index=i, padding_value=key.padding_value)
        for i, row in enumerate(coded.rows, start=1)
    ]
    matrix = reassemble(blocks, coded.m)
    return symbols_to_text(matrix.symbols())


@dataclass
class RowReport:
    """What inspect knows about one coded row."""

    index: int
    d: int
    minor: int
    status: str
    e: Optional[PartialE] = None
    equation: Optional[LinearEquation] = None
    center: Optional[int] = None
    error: Optional[str] = None


@dataclass
class InspectionReport:
    m: int
    n: int
    rows: List[RowReport] = field(default_factory=list)

    def lines(self, equations: bool = False) -> List[str]:
        """Render the report as the text printed by the CLI."""
        out = [f"m={self.m}", f"n={self.n}", f"rows={len(self.rows)}"]
        for row in self.rows:
            out.append(f"row {row.index}: d={row.d} minor22={row.minor} status={row.status}")
            if not equations or row.e is None:
                continue
            e = row.e.as_tuple()
            out.append("  e: " + " ".join(f"e{k}={v}" for k, v in enumerate(e, start=1)))
            out.append(f"  solve: {row.d} = {row.equation.coefficient}x + {row.equation.constant}")
            if row.error is not None:
                out.append(f"  error: {row.error}")
            else:
                out.append(f"  x={row.center}")
        return out


def inspect_message(coded: CodedMessage, equations: bool = False) -> InspectionReport:
    """
    Describe a coded message without assembling the text.

    Args:
        coded: CodedMessage to describe
        equations: Also compute the partial E table, decode equation and
            center of each row

    Returns:
        InspectionReport with one entry per row
    """
    key = key_for_block_count(coded.m)
    qn = q_power(key.n) if equations else None
    report = InspectionReport(m=coded.m, n=key.n)
    for i, row in enumerate(coded.rows, start=1):
        minor = row.minor()
        if row.d == 0 and all(v == key.padding_value for v in row.disclosed):
            status = "padding"
        elif minor == 0:
            status = "zero-minor"
        else:
            status = "ok"
        entry = RowReport(index=i, d=row.d, minor=minor, status=status)
        if equations:
            entry.e = partial_e(qn, row)
            entry.equation = decode_equation(qn, entry.e)
            try:
                entry.center = decode_block(row, qn, index=i, padding_value=key.padding_value).cells.entry(2, 2)
            except PadovanError as e:
                entry.error = str(e)
        report.rows.append(entry)
    return report
