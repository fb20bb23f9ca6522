"""
tests/unit/test_permutation.py

Unit tests for permeq.core.permutation.

Coverage
--------
  - Construction from 1-based images, cycles and the n-cycle shortcut
  - Invalid tables, repeated points and out-of-range points are rejected
  - compose() applies right to left; __mul__ is compose
  - inverse(), power() for negative / zero / large exponents
  - conjugate() sends τ(i) to τ(p(i))
  - order() is the lcm of the cycle lengths
  - cycles() and canonical_key() ordering (identity first)
  - restrict() to an invariant support
  - Cycle.of() rotates min-first
  - Permutations hash, compare and pickle by value
"""
from __future__ import annotations

import pickle

import pytest

from permeq.core.permutation import (
    Cycle,
    Permutation,
    compose,
    conjugate,
    cyclic,
    from_cycles,
    identity,
    inverse,
    order,
    power,
    restrict,
)
from permeq.exceptions import DegreeMismatchError, InputError


def _p(*cycles: tuple[int, ...], n: int) -> Permutation:
    return from_cycles(cycles, n)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

class TestConstruction:
    def test_from_images_is_one_based(self) -> None:
        p = Permutation.from_images([2, 3, 1])
        assert p.table == (1, 2, 0)
        assert p(1) == 2
        assert p.images == (2, 3, 1)

    def test_rejects_non_bijection(self) -> None:
        with pytest.raises(InputError):
            Permutation((0, 0, 1))

    def test_rejects_empty(self) -> None:
        with pytest.raises(InputError):
            Permutation(())

    def test_identity_needs_positive_degree(self) -> None:
        with pytest.raises(InputError):
            identity(0)

    def test_from_cycles_leaves_other_points_fixed(self) -> None:
        p = _p((1, 3), n=4)
        assert p.images == (3, 2, 1, 4)

    def test_from_cycles_rejects_repeated_point(self) -> None:
        with pytest.raises(InputError):
            _p((1, 2), (2, 3), n=3)

    def test_from_cycles_rejects_out_of_range(self) -> None:
        with pytest.raises(InputError):
            _p((1, 5), n=4)

    def test_cyclic(self) -> None:
        assert cyclic(4).images == (2, 3, 4, 1)

    def test_call_outside_range(self) -> None:
        with pytest.raises(InputError):
            identity(3)(4)


# ---------------------------------------------------------------------------
# Group operations
# ---------------------------------------------------------------------------

class TestGroupOperations:
    def test_compose_right_to_left(self) -> None:
        p = _p((1, 2), n=3)
        q = _p((2, 3), n=3)
        # p∘q: 1 -> 2, 2 -> 3, 3 -> 1
        assert compose(p, q) == _p((1, 2, 3), n=3)
        assert p * q == compose(p, q)

    def test_compose_degree_mismatch(self) -> None:
        with pytest.raises(DegreeMismatchError):
            compose(identity(3), identity(4))

    def test_inverse(self) -> None:
        p = _p((1, 4, 2), (3, 5), n=5)
        assert compose(p, inverse(p)).is_identity()
        assert compose(inverse(p), p).is_identity()

    def test_power(self) -> None:
        c = cyclic(5)
        assert power(c, 0) == identity(5)
        assert power(c, 5) == identity(5)
        assert power(c, 2) == compose(c, c)
        assert power(c, -1) == inverse(c)
        assert power(c, 1_000_003) == power(c, 3)

    def test_conjugate_relabels_cycles(self) -> None:
        p = _p((1, 2), n=3)
        tau = _p((1, 3), n=3)
        assert conjugate(p, tau) == _p((2, 3), n=3)
        assert conjugate(p, tau) == compose(compose(tau, p), inverse(tau))

    def test_order(self) -> None:
        assert order(_p((1, 2), (3, 4, 5), n=5)) == 6
        assert order(identity(4)) == 1


# ---------------------------------------------------------------------------
# Cycles and ordering
# ---------------------------------------------------------------------------

class TestCycles:
    def test_cycle_of_rotates_min_first(self) -> None:
        c = Cycle.of((3, 1, 2))
        assert c.points == (1, 2, 3)
        assert str(c) == "(1,2,3)"
        assert len(c) == 3
        assert c.support() == frozenset({1, 2, 3})

    def test_cycle_of_rejects_repeats(self) -> None:
        with pytest.raises(InputError):
            Cycle.of((1, 2, 1))

    def test_cycles_include_fixed_points(self) -> None:
        p = _p((3, 1), n=4)
        assert [c.points for c in p.cycles()] == [(1, 3), (2,), (4,)]

    def test_canonical_key_puts_identity_first(self) -> None:
        perms = [_p((1, 3), n=3), identity(3), _p((1, 2), n=3)]
        ordered = sorted(perms, key=Permutation.canonical_key)
        assert ordered == [identity(3), _p((1, 2), n=3), _p((1, 3), n=3)]

    def test_str_and_repr(self) -> None:
        p = _p((2, 4), n=4)
        assert str(p) == "(2,4)"
        assert repr(p) == "Permutation((2,4), n=4)"


# ---------------------------------------------------------------------------
# restrict
# ---------------------------------------------------------------------------

class TestRestrict:
    def test_restrict_to_invariant_set(self) -> None:
        alpha = _p((1, 2), (3, 4, 5), n=5)
        assert restrict(alpha, {3, 4, 5}) == _p((3, 4, 5), n=5)

    def test_restrict_rejects_escaping_point(self) -> None:
        with pytest.raises(InputError):
            restrict(_p((1, 2), (3, 4, 5), n=5), {1, 3})


# ---------------------------------------------------------------------------
# Value semantics
# ---------------------------------------------------------------------------

class TestValueSemantics:
    def test_equal_tables_hash_alike(self) -> None:
        p = _p((1, 2, 3), n=4)
        assert len({p, Permutation(p.table), Permutation.trusted(list(p.table))}) == 1

    def test_pickle_round_trip(self) -> None:
        p = _p((1, 5), (2, 3, 4), n=6)
        assert pickle.loads(pickle.dumps(p)) == p
