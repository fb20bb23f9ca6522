"""
permeq/search/candidates.py

Candidate generation for the pruned enumerator.

A solution y of α∘y∘α⁻¹ = y² has no even cycles, and for every cycle
length r of y the r-cycles of y cover an α-invariant set, so t_r·r ∈ F_1(α).
candidate_types() keeps only the cycle types passing both filters.

Permutations of a fixed type are produced by canonical recursive placement:
the smallest unplaced point always starts the next cycle, and the rest of
that cycle is an ordered choice of unplaced points.  Each permutation of
the type is produced exactly once, without hashing.  An optional
``consistent(table, placed)`` predicate cuts a branch as soon as the
cycles placed so far cannot extend to an accepted permutation.
Tables are 0-based.
"""
from __future__ import annotations

import math
from collections import Counter
from collections.abc import Callable, Iterator
from itertools import permutations

from permeq.analysis.cycles import CycleType, partitions
from permeq.analysis.d_range import d_range
from permeq.core.permutation import Permutation

Consistency = Callable[[list[int], list[bool]], bool]


def odd_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into odd parts, in partition order."""
    return (parts for parts in partitions(n) if all(p % 2 for p in parts))


def candidate_types(alpha: Permutation) -> list[CycleType]:
    """Cycle types a solution of (∗∗)_α may have."""
    reachable = d_range(alpha, 1)
    out: list[CycleType] = []
    for parts in odd_partitions(alpha.degree):
        counts = Counter(parts)
        if all(t * r in reachable for r, t in counts.items()):
            out.append(CycleType.from_partition(parts))
    return out


def type_size(ctype: CycleType) -> int:
    """Number of permutations of the given type: n! / ∏ r^t_r · t_r!."""
    denominator = 1
    for r in ctype.lengths():
        t = ctype.count(r)
        denominator *= r**t * math.factorial(t)
    return math.factorial(ctype.degree) // denominator


def first_cycles(ctype: CycleType) -> list[tuple[int, ...]]:
    """Every possible cycle through point 0 (0-based), in generation order.

    These split one type into independent chunks of work.
    """
    n = ctype.degree
    out: list[tuple[int, ...]] = []
    for length in sorted(set(ctype.partition)):
        for rest in permutations(range(1, n), length - 1):
            out.append((0, *rest))
    return out


def _close(table: list[int], placed: list[bool], cycle: tuple[int, ...]) -> None:
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        table[a] = b
        placed[a] = True


def _place(
    table: list[int],
    placed: list[bool],
    unplaced: list[int],
    remaining: Counter[int],
    consistent: Consistency | None,
) -> Iterator[tuple[int, ...]]:
    if not unplaced:
        yield tuple(table)
        return
    first, others = unplaced[0], unplaced[1:]
    for length in sorted(length for length, c in remaining.items() if c):
        remaining[length] -= 1
        for rest in permutations(others, length - 1):
            cycle = (first, *rest)
            _close(table, placed, cycle)
            if consistent is None or consistent(table, placed):
                taken = set(rest)
                yield from _place(
                    table, placed, [u for u in others if u not in taken], remaining, consistent
                )
            for a in cycle:
                placed[a] = False
        remaining[length] += 1


def tables_with_first_cycle(
    ctype: CycleType,
    first: tuple[int, ...],
    consistent: Consistency | None = None,
) -> Iterator[tuple[int, ...]]:
    """0-based tables of type *ctype* whose cycle through point 0 is *first*."""
    n = ctype.degree
    remaining = Counter(ctype.partition)
    if remaining[len(first)] == 0:
        return
    remaining[len(first)] -= 1
    table = list(range(n))
    placed = [False] * n
    _close(table, placed, first)
    if consistent is not None and not consistent(table, placed):
        return
    taken = set(first)
    yield from _place(table, placed, [u for u in range(n) if u not in taken], remaining, consistent)


def tables_of_type(ctype: CycleType) -> Iterator[tuple[int, ...]]:
    """All 0-based tables of the given cycle type, each exactly once."""
    n = ctype.degree
    yield from _place(list(range(n)), [False] * n, list(range(n)), Counter(ctype.partition), None)


def permutations_of_type(ctype: CycleType) -> Iterator[Permutation]:
    return (Permutation.trusted(t) for t in tables_of_type(ctype))
