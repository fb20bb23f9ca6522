"""
tests/unit/test_b2.py

Unit tests for permeq.construct.b2 and permeq.construct.powers.

Coverage
--------
  - b2_parameters() splits admissible degrees and rejects the rest
  - b2_solution() reproduces the two non-trivial 6-cycle solutions
  - Anchor and s out of range raise PreconditionError
  - b2_all_solutions(): size p, identity first, closed under powers
  - power_solutions() for several k
"""
from __future__ import annotations

import pytest

from permeq.construct.b2 import b2_all_solutions, b2_parameters, b2_solution
from permeq.construct.powers import power_solutions
from permeq.core.permutation import cyclic, from_cycles, identity, power
from permeq.exceptions import InputError, PreconditionError
from permeq.solutions import Equation, Method


# ---------------------------------------------------------------------------
# b2_parameters
# ---------------------------------------------------------------------------

class TestB2Parameters:
    @pytest.mark.parametrize(
        ("n", "expected"),
        [(6, (3, 1)), (12, (3, 2)), (20, (5, 2)), (24, (3, 3)), (40, (5, 3))],
    )
    def test_admissible(self, n: int, expected: tuple[int, int]) -> None:
        assert b2_parameters(n) == expected

    @pytest.mark.parametrize("n", [7, 10, 18, 8, 3])
    def test_rejected(self, n: int) -> None:
        with pytest.raises(PreconditionError):
            b2_parameters(n)


# ---------------------------------------------------------------------------
# b2_solution / b2_all_solutions
# ---------------------------------------------------------------------------

class TestB2Solutions:
    def test_six_cycle(self) -> None:
        assert b2_solution(cyclic(6), 1, 1) == from_cycles([(1, 3, 5), (2, 6, 4)], 6)
        assert b2_solution(cyclic(6), 1, 2) == from_cycles([(1, 5, 3), (2, 4, 6)], 6)

    def test_other_anchor_same_set(self) -> None:
        alpha = cyclic(12)
        members = set(b2_all_solutions(alpha))
        for s in (1, 2):
            assert b2_solution(alpha, 5, s) in members

    @pytest.mark.parametrize(("a", "s"), [(0, 1), (7, 1), (1, 0), (1, 3)])
    def test_out_of_range(self, a: int, s: int) -> None:
        with pytest.raises(PreconditionError):
            b2_solution(cyclic(6), a, s)

    def test_requires_single_cycle(self) -> None:
        with pytest.raises(PreconditionError):
            b2_all_solutions(from_cycles([(1, 2, 3, 4, 5, 6)], 7))

    @pytest.mark.parametrize(("n", "p"), [(6, 3), (12, 3), (20, 5), (24, 3)])
    def test_all_solutions_are_powers(self, n: int, p: int) -> None:
        result = b2_all_solutions(cyclic(n))
        assert len(result) == p
        assert result.method is Method.CONSTRUCTED
        assert result.solutions[0] == identity(n)
        y = result.solutions[1]
        assert set(result) == {power(y, e) for e in range(p)}


# ---------------------------------------------------------------------------
# power_solutions
# ---------------------------------------------------------------------------

class TestPowerSolutions:
    def test_k2_on_cycle_is_trivial(self) -> None:
        assert power_solutions(cyclic(6), 2).solutions == (identity(6),)

    def test_k3(self) -> None:
        alpha = cyclic(6)
        assert set(power_solutions(alpha, 3)) == {identity(6), power(alpha, 3)}

    def test_k_equal_one_plus_order(self) -> None:
        alpha = cyclic(6)
        result = power_solutions(alpha, 7)
        assert len(result) == 6
        assert all(Equation.starstar(alpha, 7).holds(y) for y in result)

    def test_rejects_k_zero(self) -> None:
        with pytest.raises(InputError):
            power_solutions(cyclic(4), 0)
