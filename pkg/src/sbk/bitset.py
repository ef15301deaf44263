"""Subsets of {0..n-1} encoded as integer bitmasks.

Masks are the universal carrier for subgroups, subbraces and ideals; all
structural operations work on them directly.
"""

from __future__ import annotations

from typing import Iterable

ElementSet = int


def mask_of(indices: Iterable[int]) -> ElementSet:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: ElementSet) -> list[int]:
    """Indices present in the mask, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def size(mask: ElementSet) -> int:
    return mask.bit_count()


def full_mask(n: int) -> ElementSet:
    return (1 << n) - 1


def contains(mask: ElementSet, i: int) -> bool:
    return (mask >> i) & 1 == 1


def apply_perm(perm: tuple[int, ...], mask: ElementSet) -> ElementSet:
    """Image of the set under a permutation of 0..n-1."""
    out = 0
    for i in members(mask):
        out |= 1 << perm[i]
    return out


def sort_key(mask: ElementSet) -> tuple[int, tuple[int, ...]]:
    """Deterministic ordering: by size, then by the member sequence."""
    ms = members(mask)
    return (len(ms), tuple(ms))
