"""
The keyed 28-symbol table.

Each symbol has a fixed offset (A=0 ... Z=25, ','=26, '0'=27) and is sent as
(n + offset) mod 28, where n is the Q-matrix exponent chosen from the block
count.
"""

import logging
import string

from pydantic import BaseModel, ConfigDict, PositiveInt

log = logging.getLogger(__name__)

SEPARATOR = ","
PADDING = "0"
SYMBOLS = string.ascii_uppercase + SEPARATOR + PADDING
MODULUS = len(SYMBOLS)

_OFFSETS = {symbol: offset for offset, symbol in enumerate(SYMBOLS)}


class AlphabetKey(BaseModel):
    """Shift parameter n shared by the alphabet table and the Q-matrix power."""

    model_config = ConfigDict(frozen=True, strict=True)

    n: PositiveInt

    @property
    def shift_residue(self) -> int:
        return self.n % MODULUS

    @property
    def padding_value(self) -> int:
        return encode_char(PADDING, self)


def key_for_block_count(m: int) -> AlphabetKey:
    """
    Pick the key for a message matrix of m x m blocks.

    Args:
        m: Number of blocks per side of the message matrix

    Returns:
        AlphabetKey with n = 4 when m = 1, otherwise n = m^2
    """
    if m < 1:
        raise ValueError(f"Block count must be positive, got {m}")
    n = 4 if m == 1 else m * m
    log.debug("Block count m=%d selects n=%d", m, n)
    return AlphabetKey(n=n)


def encode_char(symbol: str, key: AlphabetKey) -> int:
    """Map one of the 28 symbols to its value in [0, 27] under key."""
    try:
        offset = _OFFSETS[symbol]
    except KeyError:
        raise ValueError(f"Symbol {symbol!r} is not in the alphabet") from None
    return (key.n + offset) % MODULUS


def decode_value(value: int, key: AlphabetKey) -> str:
    """Map a value in [0, 27] back to its symbol under key."""
    if not 0 <= value < MODULUS:
        raise ValueError(f"Value {value} is outside [0, {MODULUS - 1}]")
    return SYMBOLS[(value - key.n) % MODULUS]
