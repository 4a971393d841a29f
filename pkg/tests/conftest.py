from pathlib import Path

import pytest
import hypothesis.strategies as st

from src.tasks.blocking import Block
from src.tasks.padovan import Matrix3, minor22, q_power

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "data"


def block(rows, index=1):
    return Block(index=index, cells=Matrix3.from_rows(rows))


# Example 1 block ("HELLOALA") as printed with n = 4
EXAMPLE1_BLOCK = ((11, 8, 15), (15, 18, 3), (4, 15, 4))

# Example 2 blocks and the coded matrix C as printed
EXAMPLE2_BLOCKS = (
    ((11, 8, 15), (15, 18, 3), (23, 18, 3)),
    ((5, 8, 3), (23, 11, 8), (3, 5, 8)),
    ((22, 23, 3), (7, 18, 3), (1, 18, 24)),
    ((21, 3, 5), (8, 22, 23), (3, 3, 3)),
)
EXAMPLE2_C = (
    (-1968, 11, 8, 15, 15, 3, 23, 18, 3),
    (-794, 5, 8, 3, 23, 8, 3, 5, 8),
    (4845, 22, 23, 3, 7, 3, 1, 18, 24),
    (-138, 21, 3, 5, 8, 23, 3, 3, 3),
)

valid_blocks = (
    st.lists(st.integers(0, 27), min_size=9, max_size=9)
    .map(Matrix3.from_labels)
    .filter(lambda cells: minor22(cells) != 0)
    .map(lambda cells: Block(index=1, cells=cells))
)

words = st.text(alphabet="abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ", min_size=1, max_size=12)
messages = st.lists(words, min_size=1, max_size=16).map(" ".join).filter(lambda t: len(t) <= 200)


@pytest.fixture
def q4():
    return q_power(4)


@pytest.fixture
def example1_block():
    return block(EXAMPLE1_BLOCK)


@pytest.fixture
def example2_blocks():
    return [block(rows, index=i) for i, rows in enumerate(EXAMPLE2_BLOCKS, start=1)]


@pytest.fixture
def data_dir():
    return DATA_DIR
