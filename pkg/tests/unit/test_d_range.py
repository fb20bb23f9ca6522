"""
tests/unit/test_d_range.py

Unit tests for permeq.analysis.d_range.

Coverage
--------
  - F_d(α) always contains 0 and only multiples of d up to n
  - Hand-computed ranges for mixed and cyclic α
  - d outside 1..n is rejected
  - The bitset DP agrees with the definition on every d for a small sweep
"""
from __future__ import annotations

import pytest

from permeq.analysis.cycles import CycleType, partitions
from permeq.analysis.d_range import DRange, d_range, d_range_naive
from permeq.core.permutation import cyclic, from_cycles, identity
from permeq.exceptions import InputError


def _mixed():
    return from_cycles([(1, 2), (3, 4, 5)], 6)


# ---------------------------------------------------------------------------
# Hand-computed ranges
# ---------------------------------------------------------------------------

class TestDRange:
    def test_all_sums_for_d1(self) -> None:
        assert d_range(_mixed(), 1).as_list() == [0, 1, 2, 3, 4, 5, 6]

    def test_only_multiples_of_d(self) -> None:
        assert d_range(_mixed(), 2).as_list() == [0, 2]
        assert d_range(_mixed(), 3).as_list() == [0, 3]
        assert d_range(_mixed(), 4).as_list() == [0]

    def test_single_cycle(self) -> None:
        for d in (1, 2, 3, 6):
            assert d_range(cyclic(6), d).as_list() == [0, 6]
        assert d_range(cyclic(6), 4).as_list() == [0]

    def test_two_equal_cycles(self) -> None:
        alpha = from_cycles([range(1, 7), range(7, 13)], 12)
        assert d_range(alpha, 2).as_list() == [0, 6, 12]

    def test_identity(self) -> None:
        assert d_range(identity(4), 1).as_list() == [0, 1, 2, 3, 4]

    def test_container_protocol(self) -> None:
        rng = d_range(cyclic(6), 2)
        assert isinstance(rng, DRange)
        assert 6 in rng
        assert 3 not in rng
        assert list(rng) == [0, 6]

    @pytest.mark.parametrize("d", [0, 7, -1])
    def test_rejects_d_out_of_range(self, d: int) -> None:
        with pytest.raises(InputError):
            d_range(_mixed(), d)
        with pytest.raises(InputError):
            d_range_naive(_mixed(), d)


# ---------------------------------------------------------------------------
# Oracle agreement
# ---------------------------------------------------------------------------

class TestAgainstDefinition:
    @pytest.mark.parametrize("n", [1, 4, 7, 9])
    def test_dp_matches_definition(self, n: int) -> None:
        for parts in partitions(n):
            alpha = CycleType.from_partition(parts).representative()
            for d in range(1, n + 1):
                assert d_range(alpha, d) == d_range_naive(alpha, d), (parts, d)
