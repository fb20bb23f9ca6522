"""
tests/unit/test_solver.py

Unit tests for permeq.search.solver and permeq.search.star.

Coverage
--------
  - get_solver() lookup and the unknown-strategy error
  - auto picks certified, then constructed, then pruned, then fails on the guard
  - Strategy preconditions (certified without a certificate, constructed
    on a non-cycle, quadratic-only strategies with k != 2)
  - solve_star() maps y to y∘α⁻¹ and keeps α⁻¹ as the trivial solution
"""
from __future__ import annotations

import pytest

from permeq.core.permutation import compose, cyclic, from_cycles, identity, inverse, power
from permeq.exceptions import GuardExceededError, InputError, PreconditionError
from permeq.search.solver import SOLVER_REGISTRY, get_solver, solve_starstar
from permeq.search.star import solve_star
from permeq.solutions import EquationKind, Method


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

class TestRegistry:
    def test_known_strategies(self) -> None:
        assert sorted(SOLVER_REGISTRY) == ["auto", "certified", "constructed", "naive", "pruned"]

    def test_lookup_is_case_insensitive(self) -> None:
        assert get_solver("Pruned") is SOLVER_REGISTRY["pruned"]

    def test_unknown_strategy(self) -> None:
        with pytest.raises(InputError) as info:
            get_solver("genetic")
        assert "auto, certified, constructed, naive, pruned" in str(info.value)


# ---------------------------------------------------------------------------
# auto
# ---------------------------------------------------------------------------

class TestAuto:
    def test_certified(self) -> None:
        result = solve_starstar(cyclic(165))
        assert result.method is Method.CERTIFIED
        assert result.solutions == (identity(165),)

    def test_constructed(self) -> None:
        result = solve_starstar(cyclic(6))
        assert result.method is Method.CONSTRUCTED
        assert len(result) == 3

    def test_pruned(self) -> None:
        result = solve_starstar(from_cycles([(1, 2, 3, 4, 5, 6), (7,)], 7))
        assert result.method is Method.PRUNED
        assert len(result) == 3

    def test_guard(self) -> None:
        with pytest.raises(GuardExceededError):
            solve_starstar(cyclic(21))

    def test_other_k_uses_naive(self) -> None:
        assert solve_starstar(cyclic(5), 3).method is Method.NAIVE


# ---------------------------------------------------------------------------
# Explicit strategies
# ---------------------------------------------------------------------------

class TestStrategies:
    def test_certified_needs_certificate(self) -> None:
        with pytest.raises(PreconditionError):
            solve_starstar(cyclic(6), 2, "certified")

    def test_constructed_needs_cycle(self) -> None:
        with pytest.raises(PreconditionError):
            solve_starstar(from_cycles([(1, 2, 3)], 6), 2, "constructed")

    def test_constructed_other_k_gives_powers(self) -> None:
        alpha = cyclic(6)
        result = solve_starstar(alpha, 3, "constructed")
        assert set(result) == {identity(6), power(alpha, 3)}

    @pytest.mark.parametrize("strategy", ["pruned", "certified"])
    def test_quadratic_only(self, strategy: str) -> None:
        with pytest.raises(InputError):
            solve_starstar(cyclic(4), 3, strategy)

    def test_rejects_k_zero(self) -> None:
        with pytest.raises(InputError):
            solve_starstar(cyclic(4), 0)

    def test_strategies_agree(self) -> None:
        alpha = cyclic(6)
        expected = solve_starstar(alpha, 2, "naive").solutions
        for strategy in ("pruned", "constructed", "auto"):
            assert solve_starstar(alpha, 2, strategy).solutions == expected


# ---------------------------------------------------------------------------
# solve_star
# ---------------------------------------------------------------------------

class TestSolveStar:
    def test_six_cycle(self) -> None:
        alpha = cyclic(6)
        result = solve_star(alpha)
        assert result.equation.kind is EquationKind.STAR
        inner = solve_starstar(alpha)
        assert set(result) == {compose(y, inverse(alpha)) for y in inner}
        assert inverse(alpha) in result

    def test_certified_only_inverse(self) -> None:
        alpha = cyclic(165)
        assert solve_star(alpha).solutions == (inverse(alpha),)

    def test_every_member_satisfies_star_equation(self) -> None:
        alpha = from_cycles([(1, 2, 3, 4, 5, 6), (7, 8)], 8)
        result = solve_star(alpha, "pruned")
        for x in result:
            assert compose(alpha, x) == compose(compose(compose(x, alpha), x), alpha)
