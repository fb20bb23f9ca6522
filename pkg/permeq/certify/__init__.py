from permeq.certify.certifier import (
    Certificate,
    Failure,
    PairRecord,
    PrimeCheck,
    Theorem,
    Verdict,
    a1_pairs,
    certify,
    certify_a1,
    certify_a2,
    certify_a3_cyclic,
    is_certified_trivial,
    is_cycle,
    replay,
)
from permeq.certify.number_theory import (
    gcd_mersenne,
    is_prime,
    mersenne_divisible,
    odd_prime_divisors,
    prime_factors,
    two_adic_split,
)

__all__ = [
    "Certificate",
    "Failure",
    "PairRecord",
    "PrimeCheck",
    "Theorem",
    "Verdict",
    "a1_pairs",
    "certify",
    "certify_a1",
    "certify_a2",
    "certify_a3_cyclic",
    "gcd_mersenne",
    "is_certified_trivial",
    "is_cycle",
    "is_prime",
    "mersenne_divisible",
    "odd_prime_divisors",
    "prime_factors",
    "replay",
    "two_adic_split",
]
