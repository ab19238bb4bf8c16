"""Bitmask helpers for index sets stored in Python integers.

Bit i of a mask corresponds to index i (object or attribute position).
Python integers act as arbitrary-width machine words, so unions,
intersections and subset tests are single C-level operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int], width: int, what: str = "index") -> int:
    """Pack ``indices`` into a bitmask, bounds-checking against ``width``."""
    mask = 0
    for i in indices:
        i = int(i)
        if i < 0 or i >= width:
            raise IndexError(f"{what} {i} out of range for size {width}")
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def bitstring_key(mask: int, width: int) -> int:
    """Integer that orders masks like their big-endian bit-strings.

    Index 0 is the most significant position, so comparing keys is the
    same as comparing the strings ``'1' if i in set else '0'`` written
    left to right.
    """
    key = 0
    m = mask
    while m:
        low = m & -m
        key |= 1 << (width - low.bit_length())
        m ^= low
    return key
