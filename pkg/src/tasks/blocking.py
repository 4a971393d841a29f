"""
Text normalization, message-matrix construction and 3x3 tiling.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.errors import RemediationError, ShapeError, TextNormalizationError
from src.tasks.alphabet import (
    MODULUS,
    PADDING,
    SEPARATOR,
    AlphabetKey,
    decode_value,
    encode_char,
    key_for_block_count,
)
from src.tasks.padovan import Matrix3, minor22

log = logging.getLogger(__name__)

_WORDS = re.compile(r"[A-Za-z]+(?: [A-Za-z]+)*")


@dataclass(frozen=True)
class MessageMatrix:
    """The 3m x 3m matrix of alphabet values holding a padded message."""

    m: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        size = 3 * self.m
        if self.m < 1:
            raise ShapeError(f"Block count must be positive, got {self.m}")
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ShapeError(f"Message matrix must be {size}x{size}")
        if any(not 0 <= v < MODULUS for row in self.entries for v in row):
            raise ShapeError(f"Message matrix entries must lie in [0, {MODULUS - 1}]")

    @property
    def key(self) -> AlphabetKey:
        return key_for_block_count(self.m)

    def symbols(self) -> List[str]:
        """Return the row-major symbols of the matrix, padding included."""
        key = self.key
        return [decode_value(v, key) for row in self.entries for v in row]


@dataclass(frozen=True)
class Block:
    """One 3x3 tile of a message matrix; index counts from 1 in tile order."""

    index: int
    cells: Matrix3

    def __post_init__(self):
        if any(not 0 <= v < MODULUS for v in self.cells.labels):
            raise ShapeError(f"Block {self.index} has entries outside [0, {MODULUS - 1}]")


def normalize_text(raw: str) -> List[str]:
    """
    Turn plain text into alphabet symbols.

    Letters are uppercased and every space between two words becomes ','.

    Args:
        raw: Words of ASCII letters separated by single spaces

    Returns:
        List of symbols drawn from A..Z and ','
    """
    if not raw:
        raise TextNormalizationError("Message is empty")
    if not _WORDS.fullmatch(raw):
        bad = sorted({c for c in raw if not (c.isascii() and c.isalpha()) and c != " "})
        if bad:
            raise TextNormalizationError(f"Message contains unsupported characters: {''.join(bad)!r}")
        raise TextNormalizationError("Words must be separated by single spaces, without leading or trailing spaces")
    return [SEPARATOR if c == " " else c.upper() for c in raw]


def symbols_to_text(symbols: Sequence[str]) -> str:
    """Drop padding and turn separators back into spaces."""
    return "".join(" " if s == SEPARATOR else s for s in symbols if s != PADDING)


def block_count_for(length: int) -> int:
    """Smallest m with 9 m^2 >= length."""
    m = max(1, math.isqrt(max(length - 1, 0) // 9))
    while 9 * m * m < length:
        m += 1
    return m


def build_matrix(symbols: Sequence[str]) -> MessageMatrix:
    """
    Lay symbols row-major into the smallest 3m x 3m matrix and encode them.

    Args:
        symbols: Non-empty sequence of alphabet symbols

    Returns:
        MessageMatrix whose tail is filled with the padding symbol
    """
    if not symbols:
        raise ValueError("Cannot build a message matrix from no symbols")
    m = block_count_for(len(symbols))
    key = key_for_block_count(m)
    size = 3 * m
    padded = list(symbols) + [PADDING] * (size * size - len(symbols))
    values = [encode_char(s, key) for s in padded]
    entries = tuple(tuple(values[r * size:(r + 1) * size]) for r in range(size))
    return MessageMatrix(m=m, entries=entries)


def split_blocks(matrix: MessageMatrix) -> List[Block]:
    """Cut the matrix into m^2 tiles, left to right then top to bottom."""
    blocks = []
    for tile_row in range(matrix.m):
        for tile_col in range(matrix.m):
            rows = matrix.entries[3 * tile_row:3 * tile_row + 3]
            cells = Matrix3.from_rows(row[3 * tile_col:3 * tile_col + 3] for row in rows)
            blocks.append(Block(index=len(blocks) + 1, cells=cells))
    return blocks


def reassemble(blocks: Sequence[Block], m: int) -> MessageMatrix:
    """Put m^2 tiles back together in the order split_blocks produces them."""
    if len(blocks) != m * m:
        raise ShapeError(f"Expected {m * m} blocks for m={m}, got {len(blocks)}")
    size = 3 * m
    grid = [[0] * size for _ in range(size)]
    for position, block in enumerate(blocks):
        tile_row, tile_col = divmod(position, m)
        for r, row in enumerate(block.cells.rows):
            grid[3 * tile_row + r][3 * tile_col:3 * tile_col + 3] = row
    return MessageMatrix(m=m, entries=tuple(tuple(row) for row in grid))


def is_padding_block(block: Block, key: AlphabetKey) -> bool:
    """True when every cell of the block holds the padding value."""
    return all(v == key.padding_value for v in block.cells.labels)


def failing_blocks(matrix: MessageMatrix) -> List[int]:
    """Indices of non-padding blocks whose (2,2) minor is zero."""
    key = matrix.key
    return [
        block.index
        for block in split_blocks(matrix)
        if not is_padding_block(block, key) and minor22(block.cells) == 0
    ]


def ensure_minor_condition(symbols: Sequence[str]) -> Tuple[List[str], MessageMatrix]:
    """
    Prepend padding until every non-padding block has a nonzero (2,2) minor.

    Args:
        symbols: Non-empty sequence of alphabet symbols

    Returns:
        The (possibly prefixed) symbols and their message matrix
    """
    current = list(symbols)
    prepended = 0
    cap = None
    while True:
        matrix = build_matrix(current)
        failing = failing_blocks(matrix)
        if not failing:
            if prepended:
                log.info("Minor condition met after prepending %d padding symbol(s)", prepended)
            return current, matrix
        if cap is None:
            # enough prefix to reach at least the next block count
            cap = 9 * (matrix.m + 1) ** 2
        if prepended >= cap:
            raise RemediationError(
                f"Blocks {failing} still have a zero minor after {prepended} prepended padding symbols"
            )
        log.debug("Blocks %s have a zero minor at m=%d; prepending padding", failing, matrix.m)
        current.insert(0, PADDING)
        prepended += 1
