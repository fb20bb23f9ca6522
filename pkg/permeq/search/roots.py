"""
permeq/search/roots.py

Square roots: all y with y∘y = σ.

Squaring keeps an odd cycle of y as one cycle of the same length and
splits an even 2L-cycle into two L-cycles.  So a root exists iff every
even length occurs an even number of times among the cycles of σ, and
every root is assembled per cycle length L of σ:

  * an odd L-cycle (c_0 .. c_{L-1}) may stand alone; its root on that
    support is σ^((L+1)/2), i.e. c_i -> c_{i+(L+1)/2};
  * two L-cycles a, b may merge into the 2L-cycle
    (a_0, b_o, a_1, b_{o+1}, ...), one for each offset o in 0..L-1;
  * even L-cycles must all be merged in pairs.

Different matchings or offsets give different roots, and every root
arises this way, so the construction is duplicate-free.  Up to
the roots_oracle_ceiling setting the result is cross-checked against brute
force over S_n.
"""
from __future__ import annotations

import math
import time
from collections import defaultdict
from collections.abc import Iterator
from itertools import permutations, product

import structlog

from permeq.config import get_settings
from permeq.core.permutation import Permutation
from permeq.exceptions import VerificationError
from permeq.search.enumerator import check_guard
from permeq.solutions import Equation, Method, SearchStats, SolutionSet

logger = structlog.get_logger(__name__)

# Partial root on the support of one or two σ-cycles: (point, image) pairs.
_Piece = tuple[tuple[int, int], ...]


def _cycles_by_length(sigma: Permutation) -> dict[int, list[tuple[int, ...]]]:
    groups: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for cycle in sigma.cycles():
        groups[len(cycle)].append(tuple(pt - 1 for pt in cycle.points))
    return dict(sorted(groups.items()))


def square_root_exists(sigma: Permutation) -> bool:
    return all(
        len(cycles) % 2 == 0
        for length, cycles in _cycles_by_length(sigma).items()
        if length % 2 == 0
    )


def even_length_parity(sigma: Permutation) -> dict[int, int]:
    """Even cycle lengths of σ occurring an odd number of times, with counts."""
    return {
        length: len(cycles)
        for length, cycles in _cycles_by_length(sigma).items()
        if length % 2 == 0 and len(cycles) % 2
    }


def _alone(cycle: tuple[int, ...]) -> _Piece:
    length = len(cycle)
    half = (length + 1) // 2
    return tuple((cycle[i], cycle[(i + half) % length]) for i in range(length))


def _merged(a: tuple[int, ...], b: tuple[int, ...], offset: int) -> _Piece:
    length = len(a)
    pieces: list[tuple[int, int]] = []
    for i in range(length):
        b_i = b[(i + offset) % length]
        pieces.append((a[i], b_i))
        pieces.append((b_i, a[(i + 1) % length]))
    return tuple(pieces)


def _arrangements(cycles: list[tuple[int, ...]], odd: bool) -> Iterator[list[_Piece]]:
    """Every way to cover one length class: singles (odd only) and merged pairs."""
    if not cycles:
        yield []
        return
    head, rest = cycles[0], cycles[1:]
    if odd:
        for tail in _arrangements(rest, odd):
            yield [_alone(head), *tail]
    for j, partner in enumerate(rest):
        remaining = rest[:j] + rest[j + 1 :]
        for offset in range(len(head)):
            piece = _merged(head, partner, offset)
            for tail in _arrangements(remaining, odd):
                yield [piece, *tail]


def _constructed_roots(sigma: Permutation) -> Iterator[tuple[int, ...]]:
    n = sigma.degree
    per_length = [
        list(_arrangements(cycles, odd=length % 2 == 1))
        for length, cycles in _cycles_by_length(sigma).items()
    ]
    for choice in product(*per_length):
        table = list(range(n))
        for pieces in choice:
            for piece in pieces:
                for point, image in piece:
                    table[point] = image
        yield tuple(table)


def square_roots_naive(sigma: Permutation, *, guard: int | None = None) -> SolutionSet:
    """Brute-force oracle: test every y in S_n."""
    n = sigma.degree
    limit = guard if guard is not None else get_settings().naive_guard
    check_guard("naive", n, limit)
    started = time.perf_counter()
    st = sigma.table
    found = [
        Permutation.trusted(yt)
        for yt in permutations(range(n))
        if all(yt[yt[i]] == st[i] for i in range(n))
    ]
    stats = SearchStats(candidates=math.factorial(n), elapsed_s=time.perf_counter() - started)
    return SolutionSet.build(Equation.root(sigma), found, Method.NAIVE, stats)


def square_roots_all(
    sigma: Permutation,
    *,
    guard: int | None = None,
    oracle_ceiling: int | None = None,
) -> SolutionSet:
    """Every square root of σ, built by pairing and interleaving cycles.

    Raises:
        GuardExceededError: n exceeds the roots guard.
        VerificationError: The constructed set disagrees with brute force.
    """
    n = sigma.degree
    limit = guard if guard is not None else get_settings().roots_guard
    check_guard("roots", n, limit)
    ceiling = oracle_ceiling if oracle_ceiling is not None else get_settings().roots_oracle_ceiling

    started = time.perf_counter()
    found = [Permutation.trusted(t) for t in _constructed_roots(sigma)] if square_root_exists(sigma) else []
    stats = SearchStats(
        candidates      = len(found),
        candidate_types = 0,
        elapsed_s       = time.perf_counter() - started,
    )
    result = SolutionSet.build(Equation.root(sigma), found, Method.CONSTRUCTED, stats)
    if len(result) != len(found):
        raise VerificationError(f"Root construction for {sigma} produced duplicates.")

    if n <= ceiling:
        oracle = square_roots_naive(sigma, guard=ceiling)
        if oracle.solutions != result.solutions:
            raise VerificationError(
                f"Root construction for {sigma} found {len(result)} roots, brute force {len(oracle)}."
            )
    logger.debug(
        "square_roots_complete",
        n=n,
        roots=len(result),
        oracle_checked=n <= ceiling,
        elapsed_ms=round(result.stats.elapsed_s * 1000, 1),
    )
    return result
