"""
tests/unit/test_certifier.py

Unit tests for permeq.certify.certifier.

Coverage
--------
  - a1_pairs() ordering and records for the 6-cycle
  - certify_a1(): failing pair, passing pairs, vacuous certificates
  - certify_a2(): each hypothesis failing in turn, and a passing α
  - certify_a3_cyclic() on the documented degrees
  - certify() / is_certified_trivial() aggregation
  - replay() recomputes arithmetic instead of trusting recorded values
"""
from __future__ import annotations

from dataclasses import replace

import pytest

from permeq.certify.certifier import (
    Theorem,
    Verdict,
    a1_pairs,
    certify,
    certify_a1,
    certify_a2,
    certify_a3_cyclic,
    is_certified_trivial,
    replay,
)
from permeq.core.permutation import cyclic, from_cycles, identity
from permeq.exceptions import InputError


# ---------------------------------------------------------------------------
# A1
# ---------------------------------------------------------------------------

class TestCertifyA1:
    def test_six_cycle_pairs(self) -> None:
        pairs = a1_pairs(cyclic(6))
        assert [(p.d, p.r, p.member, p.gd, p.gcd) for p in pairs] == [(2, 3, 6, 0, 3)]

    def test_six_cycle_fails_on_pair_2_3(self) -> None:
        cert = certify_a1(cyclic(6))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.theorem is Theorem.A1
        assert (cert.failure.d, cert.failure.r) == (2, 3)
        assert not cert.vacuous

    def test_165_cycle(self) -> None:
        cert = certify_a1(cyclic(165))
        assert cert.only_trivial
        assert cert.pairs
        assert all(p.passes for p in cert.pairs)

    def test_coprime_cycles_pass(self) -> None:
        cert = certify_a1(from_cycles([(1, 2), (3, 4, 5)], 5))
        assert [(p.d, p.r) for p in cert.pairs] == [(1, 3), (1, 5)]
        assert cert.only_trivial

    def test_fixed_point_blocks(self) -> None:
        cert = certify_a1(identity(3))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.failure.d == 1

    def test_vacuous_when_no_pair(self) -> None:
        cert = certify_a1(identity(2))
        assert cert.only_trivial
        assert cert.vacuous
        assert cert.pairs == ()


# ---------------------------------------------------------------------------
# A2
# ---------------------------------------------------------------------------

class TestCertifyA2:
    def test_passes(self) -> None:
        cert = certify_a2(from_cycles([(1, 2), (3, 4, 5)], 5))
        assert cert.only_trivial
        assert [(c.length, c.prime, c.exponent, c.divisible) for c in cert.checks] == [(3, 3, 1, False)]

    def test_fixed_point(self) -> None:
        cert = certify_a2(identity(3))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.failure.length == 1

    def test_lengths_not_coprime(self) -> None:
        cert = certify_a2(from_cycles([(1, 2), (3, 4, 5, 6)], 6))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert "coprime" in cert.failure.reason

    def test_too_many_equal_cycles(self) -> None:
        cert = certify_a2(from_cycles([(1, 2), (3, 4), (5, 6)], 6))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.failure.length == 2

    def test_mersenne_prime_blocks(self) -> None:
        cert = certify_a2(cyclic(6))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.failure.prime == 3


# ---------------------------------------------------------------------------
# A3
# ---------------------------------------------------------------------------

class TestCertifyA3:
    def test_165(self) -> None:
        cert = certify_a3_cyclic(165)
        assert cert.only_trivial
        assert [c.prime for c in cert.checks] == [3, 5, 11]

    @pytest.mark.parametrize(("n", "prime"), [(6, 3), (20, 5), (21, 7)])
    def test_inconclusive(self, n: int, prime: int) -> None:
        cert = certify_a3_cyclic(n)
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.failure.prime == prime

    def test_power_of_two_is_vacuous(self) -> None:
        cert = certify_a3_cyclic(8)
        assert cert.only_trivial
        assert cert.vacuous

    def test_rejects_non_positive(self) -> None:
        with pytest.raises(InputError):
            certify_a3_cyclic(0)


# ---------------------------------------------------------------------------
# Aggregation and replay
# ---------------------------------------------------------------------------

class TestAggregate:
    def test_cycle_gets_three_certificates(self) -> None:
        assert [c.theorem for c in certify(cyclic(6))] == [Theorem.A1, Theorem.A2, Theorem.A3]

    def test_non_cycle_gets_two(self) -> None:
        assert len(certify(from_cycles([(1, 2)], 3))) == 2

    def test_is_certified_trivial(self) -> None:
        assert is_certified_trivial(cyclic(165))
        assert not is_certified_trivial(cyclic(6))


class TestReplay:
    @pytest.mark.parametrize("n", [6, 8, 9, 12, 20, 165])
    def test_replay_agrees(self, n: int) -> None:
        for cert in certify(cyclic(n)):
            assert replay(cert) is cert.verdict

    def test_replay_ignores_forged_gcd(self) -> None:
        cert = certify_a1(cyclic(6))
        forged = replace(
            cert,
            verdict=Verdict.ONLY_TRIVIAL,
            pairs=tuple(replace(p, gcd=1) for p in cert.pairs),
        )
        assert replay(forged) is Verdict.INCONCLUSIVE

    def test_replay_ignores_forged_divisibility(self) -> None:
        cert = certify_a3_cyclic(21)
        forged = replace(cert, checks=tuple(replace(c, divisible=False) for c in cert.checks))
        assert replay(forged) is Verdict.INCONCLUSIVE
