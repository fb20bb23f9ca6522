"""
permeq/search/solver.py

Strategy registry for α∘y∘α⁻¹ = y^k.

    naive        brute force over S_n (any k)
    pruned       candidate cycle types only (k = 2)
    constructed  closed-form solution set of an admissible n-cycle (k = 2)
                 or the power family α^t (k != 2, complete only where
                 the caller knows it is)
    certified    {1}, backed by an OnlyTrivial certificate (k = 2)
    auto         certified → constructed → pruned, else a guard error
"""
from __future__ import annotations

from collections.abc import Callable

import structlog

from permeq.certify.certifier import certify, is_cycle
from permeq.config import get_settings
from permeq.construct.b2 import b2_all_solutions, b2_parameters
from permeq.construct.powers import power_solutions
from permeq.core.permutation import Permutation, identity
from permeq.exceptions import GuardExceededError, InputError, PreconditionError
from permeq.search.enumerator import enumerate_naive, enumerate_pruned
from permeq.solutions import Equation, Method, SolutionSet

logger = structlog.get_logger(__name__)

Solver = Callable[[Permutation, int, int | None], SolutionSet]


def _require_quadratic(strategy: str, k: int) -> None:
    if k != 2:
        raise InputError(f"Strategy '{strategy}' only solves k = 2, got k = {k}.")


def _naive(alpha: Permutation, k: int, workers: int | None = None) -> SolutionSet:
    return enumerate_naive(alpha, k)


def _pruned(alpha: Permutation, k: int, workers: int | None = None) -> SolutionSet:
    _require_quadratic("pruned", k)
    return enumerate_pruned(alpha, workers=workers)


def _is_b2_cycle(alpha: Permutation) -> bool:
    if not is_cycle(alpha):
        return False
    try:
        b2_parameters(alpha.degree)
    except PreconditionError:
        return False
    return True


def _constructed(alpha: Permutation, k: int, workers: int | None = None) -> SolutionSet:
    if k != 2:
        return power_solutions(alpha, k)
    if not is_cycle(alpha):
        raise PreconditionError("alpha is a single n-cycle")
    return b2_all_solutions(alpha)


def _certified(alpha: Permutation, k: int, workers: int | None = None) -> SolutionSet:
    _require_quadratic("certified", k)
    proof = next((c for c in certify(alpha) if c.only_trivial), None)
    if proof is None:
        raise PreconditionError("a certificate proves y = 1 is the only solution")
    logger.debug("solution_certified", n=alpha.degree, theorem=proof.theorem.value)
    return SolutionSet.build(Equation.starstar(alpha, 2), [identity(alpha.degree)], Method.CERTIFIED)


def _auto(alpha: Permutation, k: int, workers: int | None = None) -> SolutionSet:
    if k != 2:
        return _naive(alpha, k)
    if any(c.only_trivial for c in certify(alpha)):
        return _certified(alpha, k)
    if _is_b2_cycle(alpha):
        return _constructed(alpha, k)
    limit = get_settings().pruned_guard
    if alpha.degree <= limit:
        return _pruned(alpha, k, workers)
    raise GuardExceededError(
        "pruned",
        limit,
        alpha.degree,
        "No certificate or closed form applies; raise the guard with PERM_EQ_GUARDS.",
    )


SOLVER_REGISTRY: dict[str, Solver] = {
    "naive":       _naive,
    "pruned":      _pruned,
    "constructed": _constructed,
    "certified":   _certified,
    "auto":        _auto,
}


def get_solver(name: str) -> Solver:
    """Look up a strategy by name.

    Raises:
        InputError: Unknown strategy; the message lists the supported ones.
    """
    solver = SOLVER_REGISTRY.get(name.lower())
    if solver is None:
        supported = ", ".join(sorted(SOLVER_REGISTRY))
        raise InputError(f"Unknown strategy '{name}'. Supported: {supported}")
    return solver


def solve_starstar(
    alpha: Permutation,
    k: int = 2,
    strategy: str = "auto",
    *,
    workers: int | None = None,
) -> SolutionSet:
    """Solve α∘y∘α⁻¹ = y^k with the named strategy.

    Raises:
        InputError: Unknown strategy, k < 1, or k != 2 for a quadratic-only strategy.
        PreconditionError: The strategy does not apply to α.
        GuardExceededError: The chosen search exceeds its guard.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}.")
    result = get_solver(strategy)(alpha, k, workers)
    logger.info(
        "starstar_solved",
        n=alpha.degree,
        k=k,
        strategy=strategy,
        method=result.method.value,
        solutions=len(result),
        elapsed_ms=round(result.stats.elapsed_s * 1000, 1),
    )
    return result
