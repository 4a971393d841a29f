"""
The PADOVANC v1 text format for coded messages.

    PADOVANC v1 m=<m>
    <d>,<b1>,<b2>,<b3>,<b4>,<b6>,<b7>,<b8>,<b9>      (m^2 lines)

UTF-8, LF line endings, decimal integers without spaces, no trailing blank
line.
"""

import logging
import re
from typing import Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt

from src.errors import (
    CodedFormatError,
    EntryRangeError,
    FieldCountError,
    HeaderError,
    IntegerSyntaxError,
    RowCountError,
    ShapeError,
)
from src.tasks.alphabet import MODULUS
from src.tasks.codec import DISCLOSED_LABELS, CodedRow

log = logging.getLogger(__name__)

MAGIC = "PADOVANC"
VERSION = "v1"

_HEADER = re.compile(rf"{MAGIC} {VERSION} m=([1-9][0-9]*)")
_INTEGER = re.compile(r"-?(?:0|[1-9][0-9]*)")
_FIELDS_PER_ROW = 1 + len(DISCLOSED_LABELS)


class CodedMessage(BaseModel):
    """The coded matrix C together with its block count m."""

    model_config = ConfigDict(frozen=True)

    m: PositiveInt
    rows: Tuple[CodedRow, ...]

    def check_shape(self) -> None:
        if len(self.rows) != self.m * self.m:
            raise ShapeError(f"m={self.m} needs {self.m * self.m} rows, got {len(self.rows)}")


def serialize(coded: CodedMessage) -> bytes:
    """
    Write a coded message in the PADOVANC v1 format.

    Args:
        coded: Coded message with m^2 rows

    Returns:
        UTF-8 encoded file contents
    """
    coded.check_shape()
    lines = [f"{MAGIC} {VERSION} m={coded.m}"]
    lines.extend(",".join(str(v) for v in row.fields()) for row in coded.rows)
    return ("\n".join(lines) + "\n").encode("utf-8")


def _parse_int(field: str, line_no: int) -> int:
    if not _INTEGER.fullmatch(field) or field == "-0":
        raise IntegerSyntaxError(f"Line {line_no}: {field!r} is not a base-10 integer")
    try:
        return int(field)
    except ValueError as e:
        # int() refuses digit strings beyond sys.get_int_max_str_digits()
        raise IntegerSyntaxError(f"Line {line_no}: integer with {len(field)} characters cannot be read: {e}") from e


def parse(data: bytes) -> CodedMessage:
    """
    Read a PADOVANC v1 file.

    Args:
        data: Raw file contents

    Returns:
        CodedMessage with validated header, rows and entry ranges
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CodedFormatError(f"Coded file is not valid UTF-8: {e}") from None

    if not text.endswith("\n"):
        raise CodedFormatError("Coded file must end with a line feed")
    lines = text[:-1].split("\n")

    header = _HEADER.fullmatch(lines[0])
    if header is None:
        raise HeaderError(f"Expected '{MAGIC} {VERSION} m=<m>', got {lines[0]!r}")
    m = int(header.group(1))

    body = lines[1:]
    if len(body) != m * m:
        raise RowCountError(f"m={m} needs {m * m} rows, got {len(body)}")

    rows = []
    for line_no, line in enumerate(body, start=2):
        fields = line.split(",")
        if len(fields) != _FIELDS_PER_ROW:
            raise FieldCountError(f"Line {line_no}: expected {_FIELDS_PER_ROW} fields, got {len(fields)}")
        values = [_parse_int(field, line_no) for field in fields]
        for v in values[1:]:
            if not 0 <= v < MODULUS:
                raise EntryRangeError(f"Line {line_no}: disclosed entry {v} is outside [0, {MODULUS - 1}]")
        rows.append(CodedRow(d=values[0], disclosed=tuple(values[1:])))

    log.debug("Parsed coded message with m=%d", m)
    return CodedMessage(m=m, rows=tuple(rows))
