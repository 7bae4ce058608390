"""Subsets of a finite carrier stored as integer bitmasks.

An ElemSet is a plain ``int``: bit ``i`` set means carrier element ``i``
is a member. Equality is exact set equality and union is ``|``.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative carrier index {i}")
        m |= 1 << i
    return m


def single(i: int) -> int:
    return 1 << i


def members(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def iter_members(m: int) -> Iterator[int]:
    i = 0
    while m:
        if m & 1:
            yield i
        m >>= 1
        i += 1


def size(m: int) -> int:
    return bin(m).count("1")


def contains(m: int, i: int) -> bool:
    return (m >> i) & 1 == 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def full(n: int) -> int:
    return (1 << n) - 1


def nonempty_subsets(n: int) -> range:
    """All nonempty subsets of an n-element carrier, in increasing mask order."""
    return range(1, 1 << n)


def lowest(m: int) -> int:
    if not m:
        raise ValueError("empty set has no least member")
    return (m & -m).bit_length() - 1


def image(m: int, table) -> int:
    """Pointwise image of the set under an index map (sequence or dict)."""
    out = 0
    for i in iter_members(m):
        out |= 1 << table[i]
    return out


def names(m: int, labels) -> list[str]:
    return [labels[i] for i in iter_members(m)]


def fmt(m: int, labels) -> str:
    return "{" + ",".join(names(m, labels)) + "}"
