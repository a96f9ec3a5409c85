from collections.abc import Iterator
from functools import lru_cache

import numpy as np

from binopt.common.types import IndexVector, RealVector


def format_bits(value: int, n: int) -> str:
    """
    Render an n-bit value most-significant bit first (x_{n-1} ... x_0).
    """
    return format(value, f"0{n}b")


def iter_set_bits(mask: int) -> Iterator[int]:
    """
    Yield the positions of the set bits of mask in ascending order.
    """
    position = 0
    while mask:
        if mask & 1:
            yield position
        mask >>= 1
        position += 1


def iter_submasks(mask: int) -> Iterator[int]:
    """
    Yield every submask of mask (mask itself and 0 included).
    """
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=32)
def cube_indices(n: int) -> IndexVector:
    """
    All points of the n-dimensional cube as integers 0 .. 2^n - 1.
    """
    indices = np.arange(1 << n, dtype=np.int64)
    indices.flags.writeable = False
    return indices


def bit_columns(n: int) -> RealVector:
    """
    Matrix of shape (2^n, n) whose row x holds the bits x_0 .. x_{n-1}.
    """
    indices = cube_indices(n)
    return ((indices[:, None] >> np.arange(n)) & 1).astype(np.float64)


def parity_of(values: IndexVector) -> IndexVector:
    """
    Popcount parity of each entry.
    """
    return (np.bitwise_count(values) & 1).astype(np.int64)
