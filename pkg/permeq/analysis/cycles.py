"""
permeq/analysis/cycles.py

Cycle decomposition and cycle types.

A CycleType ⟨t1, ..., tn⟩ records how many cycles of each length a
permutation has; two permutations of S_n are conjugate exactly when their
cycle types agree.  partitions() enumerates every cycle type of S_n and
CycleType.representative() picks the canonical permutation of a type
(cycles over consecutive points, longest first, starting at 1).
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from permeq.core.permutation import Cycle, Permutation, from_cycles
from permeq.exceptions import DegreeMismatchError, InputError


@dataclass(frozen=True)
class CycleType:
    """Multiplicities ``counts[i - 1] = t_i`` of i-cycles; sum of i·t_i is n."""

    degree: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.degree:
            raise InputError(f"counts must have length {self.degree}, got {len(self.counts)}.")
        if any(c < 0 for c in self.counts):
            raise InputError("Cycle counts must be nonnegative.")
        total = sum(i * c for i, c in enumerate(self.counts, start=1))
        if total != self.degree:
            raise InputError(f"Cycle type sums to {total}, expected {self.degree}.")

    @classmethod
    def from_partition(cls, parts: Iterable[int]) -> CycleType:
        lengths = [int(p) for p in parts]
        if not lengths or any(p < 1 for p in lengths):
            raise InputError(f"Partition {lengths} must contain positive parts.")
        n = sum(lengths)
        counts = [0] * n
        for p in lengths:
            counts[p - 1] += 1
        return cls(n, tuple(counts))

    def count(self, length: int) -> int:
        """t_length; zero for lengths outside 1..n."""
        if 1 <= length <= self.degree:
            return self.counts[length - 1]
        return 0

    @property
    def partition(self) -> tuple[int, ...]:
        """Cycle lengths in decreasing order (fixed points included)."""
        out: list[int] = []
        for length in range(self.degree, 0, -1):
            out.extend([length] * self.counts[length - 1])
        return tuple(out)

    def lengths(self) -> list[int]:
        """Distinct cycle lengths present, increasing."""
        return [i for i, c in enumerate(self.counts, start=1) if c]

    def representative(self) -> Permutation:
        cycles: list[range] = []
        start = 1
        for length in self.partition:
            cycles.append(range(start, start + length))
            start += length
        return from_cycles(cycles, self.degree)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.partition)) + "]"


def cycle_decomposition(p: Permutation) -> list[Cycle]:
    """Cycles of *p* partitioning 1..n, fixed points included, canonical order."""
    return p.cycles()


def cycle_type(p: Permutation) -> CycleType:
    counts = [0] * p.degree
    for c in p.cycles():
        counts[len(c) - 1] += 1
    return CycleType(p.degree, tuple(counts))


def same_type(p: Permutation, q: Permutation) -> bool:
    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)
    return cycle_type(p) == cycle_type(q)


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of *n* with decreasing parts, in reverse-lexicographic order.

    ``partitions(4)`` yields (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1).
    """
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for head in range(min(n, largest), 0, -1):
        for tail in partitions(n - head, head):
            yield (head, *tail)
