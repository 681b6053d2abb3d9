"""Small shared helpers: partition enumeration and error types."""

from __future__ import annotations

from math import factorial
from typing import Iterator


class CapExceededError(Exception):
    """A configurable computation cap (enumeration size, symbolic degree) was hit."""


def partitions(n: int, max_parts: int, max_value: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of n into at most max_parts parts, each <= max_value.

    Parts are positive and listed in weakly decreasing order.  The empty
    partition is yielded for n = 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    bound = n if max_value is None else min(n, max_value)

    def rec(remaining: int, largest: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0 or largest == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, bound, max_parts)


def falling_factorial(q: int, k: int) -> int:
    """q(q-1)...(q-k+1); zero when k > q."""
    out = 1
    for i in range(k):
        out *= q - i
    return out


def placement_count(q_slots: int, parts: tuple[int, ...]) -> int:
    """Number of ways to place a multiset of parts into q distinguishable slots.

    Equal parts are interchangeable, so the count is the falling factorial of
    q_slots divided by the factorials of the multiplicities.  This converts a
    sum over ordered compositions into a sum over partitions.
    """
    mults: dict[int, int] = {}
    for p in parts:
        mults[p] = mults.get(p, 0) + 1
    denom = 1
    for m in mults.values():
        denom *= factorial(m)
    num = falling_factorial(q_slots, len(parts))
    assert num % denom == 0
    return num // denom
