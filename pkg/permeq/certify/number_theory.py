"""Small-integer number theory for the certificates.

Primality is decided by deterministic trial division, which is exact and
fast for the degrees this package handles (n up to a few thousand; the
divisor loop runs to sqrt(n)).  Mersenne divisibility p | 2^e − 1 is
decided with three-argument pow(), so 2^e is never materialised.
"""
from __future__ import annotations

import math

from permeq.exceptions import InputError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n >= 1, increasing."""
    if n < 1:
        raise InputError(f"prime_factors needs n >= 1, got {n}.")
    out: list[int] = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def odd_prime_divisors(n: int) -> list[int]:
    return [p for p in prime_factors(n) if p != 2]


def two_adic_split(n: int) -> tuple[int, int]:
    """Return (m, odd) with n = odd · 2^m."""
    if n < 1:
        raise InputError(f"two_adic_split needs n >= 1, got {n}.")
    m = (n & -n).bit_length() - 1
    return m, n >> m


def mersenne_divisible(p: int, e: int) -> bool:
    """True iff p divides 2^e − 1.

    Raises:
        InputError: p is not an odd prime, or e < 1.
    """
    if p < 3 or not is_prime(p):
        raise InputError(f"p must be an odd prime, got {p}.")
    if e < 1:
        raise InputError(f"Exponent must be positive, got {e}.")
    return pow(2, e, p) == 1


def gcd_mersenne(d: int, r: int) -> int:
    """gcd(2^d − 1, r) for r >= 1 without forming 2^d."""
    return math.gcd((pow(2, d, r) - 1) % r, r)
