"""
permeq/search/enumerator.py

Exhaustive solvers for α∘y∘α⁻¹ = y^k.

    enumerate_naive    every y in S_n, any k ≥ 1           n ≤ naive guard
    enumerate_pruned   candidate cycle types only, k = 2   n ≤ pruned guard

The pruned search is split into independent chunks keyed by
(cycle type, cycle through point 1) and fanned out with joblib.  Chunks
only read α; the merged result is canonically sorted by SolutionSet, so
the output does not depend on the worker count.

SearchStats.candidates is the size of the space each solver is complete
over: n! for the naive solver, the number of permutations of the
candidate types for the pruned one.
"""
from __future__ import annotations

import math
import time
from itertools import permutations

import structlog
from joblib import Parallel, delayed

from permeq.analysis.cycles import CycleType
from permeq.config import get_settings
from permeq.core.permutation import Permutation
from permeq.exceptions import GuardExceededError, InputError
from permeq.search.candidates import (
    Consistency,
    candidate_types,
    first_cycles,
    tables_with_first_cycle,
    type_size,
)
from permeq.solutions import Equation, Method, SearchStats, SolutionSet, starstar_holds

logger = structlog.get_logger(__name__)


def check_guard(name: str, degree: int, limit: int, hint: str = "") -> None:
    if degree > limit:
        raise GuardExceededError(name, limit, degree, hint)


def resolve_workers(workers: int | None) -> int:
    n_jobs = workers if workers is not None else get_settings().workers
    if n_jobs < 1:
        raise InputError(f"workers must be at least 1, got {n_jobs}.")
    return n_jobs


def enumerate_naive(alpha: Permutation, k: int = 2, *, guard: int | None = None) -> SolutionSet:
    """Test every permutation of S_n against α∘y = y^k∘α.

    Raises:
        GuardExceededError: n exceeds the naive guard.
    """
    n = alpha.degree
    limit = guard if guard is not None else get_settings().naive_guard
    check_guard("naive", n, limit, "Use enumerate_pruned (k = 2) or raise the guard.")
    equation = Equation.starstar(alpha, k)

    started = time.perf_counter()
    at = alpha.table
    found = [Permutation.trusted(yt) for yt in permutations(range(n)) if starstar_holds(at, yt, k)]
    stats = SearchStats(
        candidates      = math.factorial(n),
        candidate_types = 0,
        elapsed_s       = time.perf_counter() - started,
    )
    logger.debug("naive_enumeration_complete", n=n, k=k, solutions=len(found), **stats.as_dict())
    return SolutionSet.build(equation, found, Method.NAIVE, stats)


def _consistency(alpha_table: tuple[int, ...]) -> Consistency:
    """α(y(x)) = y(y(α(x))) wherever all three values of y are already placed."""

    def consistent(table: list[int], placed: list[bool]) -> bool:
        for x, ax in enumerate(alpha_table):
            if placed[x] and placed[ax]:
                z = table[ax]
                if placed[z] and alpha_table[table[x]] != table[z]:
                    return False
        return True

    return consistent


def _search_chunk(
    alpha_table: tuple[int, ...],
    ctype: CycleType,
    first: tuple[int, ...],
) -> list[tuple[int, ...]]:
    consistent = _consistency(alpha_table)
    return [
        yt
        for yt in tables_with_first_cycle(ctype, first, consistent)
        if starstar_holds(alpha_table, yt, 2)
    ]


def enumerate_pruned(
    alpha: Permutation,
    *,
    guard: int | None = None,
    workers: int | None = None,
) -> SolutionSet:
    """All solutions of α∘y∘α⁻¹ = y², searching candidate cycle types only.

    Raises:
        GuardExceededError: n exceeds the pruned guard.
    """
    n = alpha.degree
    limit = guard if guard is not None else get_settings().pruned_guard
    check_guard("pruned", n, limit, "Raise it with PERM_EQ_GUARDS=pruned=<n>.")
    n_jobs = resolve_workers(workers)

    started = time.perf_counter()
    types = candidate_types(alpha)
    chunks = [(ctype, first) for ctype in types for first in first_cycles(ctype)]
    logger.debug("pruned_enumeration_started", n=n, types=[str(t) for t in types], chunks=len(chunks))

    results = Parallel(n_jobs=n_jobs)(
        delayed(_search_chunk)(alpha.table, ctype, first) for ctype, first in chunks
    )

    found = [Permutation.trusted(yt) for hits in results for yt in hits]
    stats = SearchStats(
        candidates      = sum(type_size(t) for t in types),
        candidate_types = len(types),
        elapsed_s       = time.perf_counter() - started,
    )
    logger.info(
        "pruned_enumeration_complete",
        n=n,
        types=len(types),
        candidates=stats.candidates,
        solutions=len(found),
        elapsed_ms=round(stats.elapsed_s * 1000, 1),
    )
    return SolutionSet.build(Equation.starstar(alpha, 2), found, Method.PRUNED, stats)
