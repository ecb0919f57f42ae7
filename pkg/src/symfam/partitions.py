"""Integer partitions: the index set for everything in this package.

Canonical term order is by degree, then reverse-lexicographic within a degree
((n) first, (1^n) last); all user-facing listings follow it.
"""

from __future__ import annotations

import re
from functools import total_ordering
from math import factorial
from typing import Callable, Iterator, Optional


@total_ordering
class Partition:
    """Weakly decreasing sequence of positive integers (possibly empty)."""

    __slots__ = ("parts", "size")

    def __init__(self, parts=()):
        parts = tuple(parts)
        for i, a in enumerate(parts):
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"parts must be positive integers, got {a!r}")
            if i and parts[i - 1] < a:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "size", sum(parts))

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __hash__(self):
        return hash(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other):
        # canonical order: by size, then largest-part-first lexicographic
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.size, tuple(-a for a in self.parts))

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.parts) + "]"

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> multiplicity."""
        m: dict[int, int] = {}
        for a in self.parts:
            m[a] = m.get(a, 0) + 1
        return m

    def scale(self, k: int) -> "Partition":
        """Every part multiplied by k (the p_k plethysm action on indices)."""
        return Partition(tuple(a * k for a in self.parts))

    def union(self, other: "Partition") -> "Partition":
        """Multiset union, re-sorted (index of a power-sum product)."""
        return Partition(tuple(sorted(self.parts + other.parts, reverse=True)))

    def remove_one_part(self, value: int) -> "Partition":
        parts = list(self.parts)
        parts.remove(value)
        return Partition(parts)


def partition_from_str(text: str) -> Partition:
    """Parse the textual form "[a1,a2,...]" (no spaces required)."""
    text = text.strip()
    if not re.fullmatch(r"\[\s*(\d+\s*(,\s*\d+\s*)*)?\]", text):
        raise ValueError(f"not a partition literal: {text!r}")
    inner = text.strip()[1:-1].strip()
    parts = tuple(int(tok) for tok in inner.split(",")) if inner else ()
    return Partition(parts)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam.parts:
        return lam
    cols = [sum(1 for a in lam.parts if a > j) for j in range(lam.parts[0])]
    return Partition(cols)


def z_of(lam: Partition) -> int:
    """Centralizer order of a permutation of cycle type lam: prod i^m_i * m_i!."""
    z = 1
    for i, m in lam.multiplicities().items():
        z *= i**m * factorial(m)
    return z


def _build_filter(
    distinct: bool,
    parts_in: Optional[object],
    odd_parts: bool,
    power_of: Optional[int],
) -> Optional[Callable[[int], bool]]:
    preds = []
    if parts_in is not None:
        if callable(parts_in):
            preds.append(parts_in)
        else:
            allowed = frozenset(parts_in)
            preds.append(lambda a: a in allowed)
    if odd_parts:
        preds.append(lambda a: a % 2 == 1)
    if power_of is not None:
        q = power_of

        def is_power(a: int) -> bool:
            while a % q == 0:
                a //= q
            return a == 1

        preds.append(is_power)
    if not preds:
        return None
    if len(preds) == 1:
        return preds[0]
    return lambda a: all(p(a) for p in preds)


def partitions_of(
    n: int,
    *,
    distinct: bool = False,
    parts_in: Optional[object] = None,
    odd_parts: bool = False,
    power_of: Optional[int] = None,
    max_part: Optional[int] = None,
) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order ((n) first, (1^n) last).

    Filters compose as a conjunction: distinct parts, parts drawn from a set
    or predicate, odd parts only, parts that are powers of a fixed base.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    part_ok = _build_filter(distinct, parts_in, odd_parts, power_of)

    def rec(remaining: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(tuple(acc))
            return
        for a in range(min(cap, remaining), 0, -1):
            if part_ok is not None and not part_ok(a):
                continue
            acc.append(a)
            next_cap = a - 1 if distinct else a
            yield from rec(remaining - a, next_cap, acc)
            acc.pop()

    yield from rec(n, max_part if max_part is not None else n, [])


def count_partitions(n: int) -> int:
    return sum(1 for _ in partitions_of(n))
