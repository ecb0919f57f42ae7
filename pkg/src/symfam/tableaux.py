"""Standard Young tableaux, descents, major index: the counting oracle.

Kept deliberately independent of the character machinery so that tableau
counts can cross-check Schur multiplicities computed the algebraic way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import Partition


@dataclass(frozen=True)
class StandardTableau:
    """Rows of a standard filling of a Young diagram with 1..n."""

    rows: tuple

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def row_of(self, value: int) -> int:
        for i, row in enumerate(self.rows):
            if value in row:
                return i
        raise ValueError(f"{value} not in tableau")

    def __str__(self):
        return "/".join(",".join(str(v) for v in row) for row in self.rows)


def syt_enumerate(shape: Partition) -> Iterator[StandardTableau]:
    """All standard tableaux of the given shape, in a fixed deterministic order.

    Built by removing the largest entry from each removable corner, corners
    scanned top-down, so the sequence is reproducible.
    """
    n = shape.size

    def rec(parts: tuple) -> Iterator[tuple]:
        total = sum(parts)
        if total == 0:
            yield ()
            return
        for i, a in enumerate(parts):
            if a == 0:
                continue
            if i + 1 < len(parts) and parts[i + 1] == a:
                continue  # not a removable corner
            smaller = parts[:i] + (a - 1,) + parts[i + 1 :]
            for partial in rec(smaller):
                rows = list(partial) + [()] * (len(parts) - len(partial))
                rows[i] = rows[i] + (total,)
                # drop empty trailing rows for the recursion's row list
                while rows and not rows[-1]:
                    rows.pop()
                yield tuple(rows)

    for rows in rec(shape.parts):
        yield StandardTableau(tuple(rows))


def syt_count(shape: Partition) -> int:
    return sum(1 for _ in syt_enumerate(shape))


def descents(t: StandardTableau) -> list[int]:
    """Entries i such that i+1 sits in a strictly lower row."""
    n = t.size
    position = {}
    for r, row in enumerate(t.rows):
        for v in row:
            position[v] = r
    return [i for i in range(1, n) if position[i + 1] > position[i]]


def maj(t: StandardTableau) -> int:
    """Major index: the sum of the descents."""
    return sum(descents(t))


def foulkes_oracle(shape: Partition, r: int, n: int) -> int:
    """Number of standard tableaux of the shape with maj congruent to r mod n."""
    if shape.size != n:
        raise ValueError(f"shape {shape} is not a partition of {n}")
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}")
    return sum(1 for t in syt_enumerate(shape) if maj(t) % n == r % n)
