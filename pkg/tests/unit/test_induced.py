"""
tests/unit/test_induced.py

Unit tests for permeq.analysis.induced.

Coverage
--------
  - fixed_set_decomposition() returns the covering cycles of α
  - An escaping point raises NotFixedSetError naming point and image
  - base_sets() / induced_index_permutation() on a known solution
  - NotInducedError and PreconditionError paths
  - descent_cycle() finds a fixed point of α when d = 1, a 2-cycle of α
    when α swaps two 5-cycles of y, and gives up when gcd(2^d − 1, r) != 1
"""
from __future__ import annotations

import pytest

from permeq.analysis.induced import (
    InducedPermutation,
    base_sets,
    descent_cycle,
    fixed_set_decomposition,
    induced_index_permutation,
)
from permeq.core.permutation import Cycle, cyclic, from_cycles
from permeq.exceptions import NotFixedSetError, NotInducedError, PreconditionError
from permeq.solutions import Equation


def _y1():
    return from_cycles([(1, 3, 5), (2, 6, 4)], 6)


# ---------------------------------------------------------------------------
# fixed_set_decomposition
# ---------------------------------------------------------------------------

class TestFixedSets:
    def test_union_of_cycles(self) -> None:
        alpha = from_cycles([(1, 2), (3, 4, 5)], 6)
        cycles = fixed_set_decomposition(alpha, {3, 4, 5, 6})
        assert [c.points for c in cycles] == [(3, 4, 5), (6,)]

    def test_escaping_point(self) -> None:
        alpha = from_cycles([(1, 2), (3, 4, 5)], 6)
        with pytest.raises(NotFixedSetError) as info:
            fixed_set_decomposition(alpha, {1, 3})
        assert info.value.point == 1
        assert info.value.image == 2

    def test_empty_set(self) -> None:
        assert fixed_set_decomposition(cyclic(4), set()) == []


# ---------------------------------------------------------------------------
# induced_index_permutation
# ---------------------------------------------------------------------------

class TestInducedPermutation:
    def test_base_sets_sorted_by_minimum(self) -> None:
        assert base_sets(_y1(), 3) == ((1, 3, 5), (2, 4, 6))

    def test_six_cycle_swaps_the_base_sets(self) -> None:
        induced = induced_index_permutation(cyclic(6), _y1(), 3)
        assert isinstance(induced, InducedPermutation)
        assert induced.gamma.images == (2, 1)

    def test_not_induced(self) -> None:
        alpha = from_cycles([(1, 2)], 6)
        with pytest.raises(NotInducedError) as info:
            induced_index_permutation(alpha, _y1(), 3)
        assert info.value.index == 1

    def test_no_cycle_of_length_r(self) -> None:
        with pytest.raises(PreconditionError):
            induced_index_permutation(cyclic(6), _y1(), 5)


# ---------------------------------------------------------------------------
# descent_cycle
# ---------------------------------------------------------------------------

class TestDescentCycle:
    def test_fixed_base_set_yields_fixed_point(self) -> None:
        # (2,3)∘(1,2,3)∘(2,3) = (1,3,2) = (1,2,3)^2
        alpha = from_cycles([(2, 3)], 3)
        y = from_cycles([(1, 2, 3)], 3)
        induced = induced_index_permutation(alpha, y, 3)
        found = descent_cycle(alpha, y, induced, Cycle((1,)))
        assert found == Cycle((1,))
        assert alpha(found.minimum) == found.minimum

    def test_swapped_base_sets_yield_two_cycle(self) -> None:
        # α swaps the two 5-cycles of y (d = 2) and gcd(2^2 - 1, 5) = 1
        y = from_cycles([(1, 2, 3, 4, 5), (6, 7, 8, 9, 10)], 10)
        alpha = from_cycles([(1, 6), (2, 8, 5, 9), (3, 10, 4, 7)], 10)
        assert Equation.starstar(alpha).holds(y)
        induced = induced_index_permutation(alpha, y, 5)
        assert induced.gamma == from_cycles([(1, 2)], 2)
        found = descent_cycle(alpha, y, induced, Cycle((1, 2)))
        assert found == Cycle((1, 6))
        assert alpha(alpha(found.minimum)) == found.minimum

    def test_gives_up_when_gcd_is_not_one(self) -> None:
        induced = induced_index_permutation(cyclic(6), _y1(), 3)
        assert descent_cycle(cyclic(6), _y1(), induced, Cycle((1, 2))) is None
