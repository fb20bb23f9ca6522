"""
permeq/certify/certifier.py

Triviality certificates for α∘y∘α⁻¹ = y².

Each certifier checks a sufficient condition under which y = 1 is the only
solution and returns a Certificate recording every check it made, so an
external verifier (or replay()) can re-derive the verdict without access
to α.

certify_a1(alpha)
    For every pair (d, r) with d >= 1, r odd >= 3, d·r <= n and
    d·r ∈ F_d(α): g_d = 0 and gcd(2^d − 1, r) = 1.

certify_a2(alpha)
    g_1 = 0; distinct cycle lengths pairwise coprime; each present length a
    has 1 <= g_a <= 2 and no odd prime p | a with p | 2^(a/p) − 1.

certify_a3_cyclic(n)
    α an n-cycle: no odd prime p | n with p | 2^(n/p) − 1.

An Inconclusive verdict never claims that a non-trivial solution exists.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import structlog

from permeq.analysis.cycles import cycle_type
from permeq.analysis.d_range import d_range
from permeq.certify.number_theory import gcd_mersenne, mersenne_divisible, odd_prime_divisors
from permeq.core.permutation import Permutation
from permeq.exceptions import InputError

logger = structlog.get_logger(__name__)


class Verdict(str, Enum):
    ONLY_TRIVIAL = "OnlyTrivial"
    INCONCLUSIVE = "Inconclusive"


class Theorem(str, Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"


@dataclass(frozen=True)
class PairRecord:
    """One (d, r) pair checked by A1; ``member`` = d·r ∈ F_d(α) is the witness."""

    d: int
    r: int
    member: int
    gd: int
    gcd: int

    @property
    def passes(self) -> bool:
        return self.gd == 0 and self.gcd == 1


@dataclass(frozen=True)
class PrimeCheck:
    """Whether the odd prime p | a divides 2^(a/p) − 1."""

    length: int
    prime: int
    exponent: int
    divisible: bool


@dataclass(frozen=True)
class Failure:
    """The first violated hypothesis of an Inconclusive certificate."""

    reason: str
    d: int | None = None
    r: int | None = None
    length: int | None = None
    prime: int | None = None


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    theorem: Theorem
    degree: int
    # (cycle length, multiplicity) of α for every present length
    lengths: tuple[tuple[int, int], ...] = ()
    pairs: tuple[PairRecord, ...] = ()
    checks: tuple[PrimeCheck, ...] = ()
    failure: Failure | None = None
    vacuous: bool = False

    @property
    def only_trivial(self) -> bool:
        return self.verdict is Verdict.ONLY_TRIVIAL


def _length_profile(alpha: Permutation) -> tuple[tuple[int, int], ...]:
    ctype = cycle_type(alpha)
    return tuple((a, ctype.count(a)) for a in ctype.lengths())


def _prime_checks(lengths: tuple[tuple[int, int], ...]) -> tuple[PrimeCheck, ...]:
    checks: list[PrimeCheck] = []
    for a, _ in lengths:
        for p in odd_prime_divisors(a):
            checks.append(PrimeCheck(a, p, a // p, mersenne_divisible(p, a // p)))
    return tuple(checks)


# ---------------------------------------------------------------------------
# A1
# ---------------------------------------------------------------------------

def a1_pairs(alpha: Permutation) -> tuple[PairRecord, ...]:
    """Every (d, r) pair A1 quantifies over, ordered by (d, r)."""
    n = alpha.degree
    ctype = cycle_type(alpha)
    records: list[PairRecord] = []
    for d in range(1, n + 1):
        if 3 * d > n:
            break
        members = d_range(alpha, d)
        for r in range(3, n // d + 1, 2):
            if d * r in members:
                records.append(PairRecord(d, r, d * r, ctype.count(d), gcd_mersenne(d, r)))
    return tuple(records)


def _a1_verdict(pairs: tuple[PairRecord, ...]) -> tuple[Verdict, Failure | None]:
    for rec in pairs:
        if rec.gd != 0:
            return Verdict.INCONCLUSIVE, Failure(
                f"g_{rec.d} = {rec.gd} != 0 while {rec.member} ∈ F_{rec.d}", d=rec.d, r=rec.r
            )
        if rec.gcd != 1:
            return Verdict.INCONCLUSIVE, Failure(
                f"gcd(2^{rec.d} - 1, {rec.r}) = {rec.gcd} != 1", d=rec.d, r=rec.r
            )
    return Verdict.ONLY_TRIVIAL, None


def certify_a1(alpha: Permutation) -> Certificate:
    pairs = a1_pairs(alpha)
    verdict, failure = _a1_verdict(pairs)
    cert = Certificate(
        verdict=verdict,
        theorem=Theorem.A1,
        degree=alpha.degree,
        lengths=_length_profile(alpha),
        pairs=pairs,
        failure=failure,
        vacuous=not pairs,
    )
    logger.debug(
        "certificate_issued",
        theorem="A1",
        verdict=verdict.value,
        n=alpha.degree,
        pairs=len(pairs),
        vacuous=cert.vacuous,
    )
    return cert


# ---------------------------------------------------------------------------
# A2
# ---------------------------------------------------------------------------

def _a2_failure(
    lengths: tuple[tuple[int, int], ...],
    checks: tuple[PrimeCheck, ...],
) -> Failure | None:
    multiplicity = dict(lengths)
    if multiplicity.get(1, 0) != 0:
        return Failure(f"g_1 = {multiplicity[1]} != 0", length=1)
    for a, g in lengths:
        if not 1 <= g <= 2:
            return Failure(f"g_{a} = {g} outside 1..2", length=a)
    for a, b in combinations([a for a, _ in lengths], 2):
        if math.gcd(a, b) != 1:
            return Failure(f"cycle lengths {a} and {b} are not coprime", length=b)
    for chk in checks:
        if chk.divisible:
            return Failure(
                f"{chk.prime} divides 2^{chk.exponent} - 1",
                length=chk.length,
                prime=chk.prime,
            )
    return None


def certify_a2(alpha: Permutation) -> Certificate:
    lengths = _length_profile(alpha)
    checks = _prime_checks(lengths)
    failure = _a2_failure(lengths, checks)
    verdict = Verdict.ONLY_TRIVIAL if failure is None else Verdict.INCONCLUSIVE
    logger.debug("certificate_issued", theorem="A2", verdict=verdict.value, n=alpha.degree)
    return Certificate(
        verdict=verdict,
        theorem=Theorem.A2,
        degree=alpha.degree,
        lengths=lengths,
        checks=checks,
        failure=failure,
    )


# ---------------------------------------------------------------------------
# A3
# ---------------------------------------------------------------------------

def certify_a3_cyclic(n: int) -> Certificate:
    """Certificate for the n-cycle (1, 2, ..., n)."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}.")
    lengths = ((n, 1),)
    checks = _prime_checks(lengths)
    failure = next(
        (
            Failure(f"{c.prime} divides 2^{c.exponent} - 1", length=n, prime=c.prime)
            for c in checks
            if c.divisible
        ),
        None,
    )
    verdict = Verdict.ONLY_TRIVIAL if failure is None else Verdict.INCONCLUSIVE
    logger.debug("certificate_issued", theorem="A3", verdict=verdict.value, n=n)
    return Certificate(
        verdict=verdict,
        theorem=Theorem.A3,
        degree=n,
        lengths=lengths,
        checks=checks,
        failure=failure,
        vacuous=not checks,
    )


# ---------------------------------------------------------------------------
# Aggregate and replay
# ---------------------------------------------------------------------------

def is_cycle(alpha: Permutation) -> bool:
    """True when α is a single n-cycle."""
    return len(alpha.cycles()) == 1


def certify(alpha: Permutation) -> list[Certificate]:
    """Run every applicable certifier: A1, A2, and A3 when α is an n-cycle."""
    certs = [certify_a1(alpha), certify_a2(alpha)]
    if is_cycle(alpha):
        certs.append(certify_a3_cyclic(alpha.degree))
    return certs


def is_certified_trivial(alpha: Permutation) -> bool:
    return any(c.only_trivial for c in certify(alpha))


def replay(cert: Certificate) -> Verdict:
    """Re-derive the verdict from the recorded checks alone.

    Every gcd and every divisibility is recomputed from its (d, r) or
    (p, exponent) record; the recorded booleans are not trusted.
    """
    if cert.theorem is Theorem.A1:
        recomputed = tuple(
            PairRecord(p.d, p.r, p.d * p.r, p.gd, gcd_mersenne(p.d, p.r)) for p in cert.pairs
        )
        return _a1_verdict(recomputed)[0]

    checks = tuple(
        PrimeCheck(c.length, c.prime, c.exponent, mersenne_divisible(c.prime, c.exponent))
        for c in cert.checks
    )
    if cert.theorem is Theorem.A2:
        failure = _a2_failure(cert.lengths, checks)
    else:
        failure = next((c for c in checks if c.divisible), None)
    return Verdict.ONLY_TRIVIAL if failure is None else Verdict.INCONCLUSIVE
