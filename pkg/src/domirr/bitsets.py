"""Small helpers for the int-bitmask vertex sets used across the package."""

from __future__ import annotations

from collections.abc import Iterable


def to_mask(vertices: Iterable[int], n: int | None = None) -> int:
    """Pack vertex ids into a bitmask, optionally range-checking against n."""
    mask = 0
    for v in vertices:
        v = int(v)
        if v < 0 or (n is not None and v >= n):
            raise ValueError(f"vertex {v} out of range 0..{(n or 0) - 1}")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def iter_bits(mask: int):
    """Yield set-bit indices in ascending order."""
    mask = int(mask)
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask: int) -> int:
    return int(mask).bit_count()
