"""
permeq/construct/b2.py

Complete solution of α∘y∘α⁻¹ = y² for an n-cycle α with n = p·2^m,
where p >= 3 is a prime dividing 2^(2^m) − 1.

Fix an anchor a and q = 2^m.  Every non-trivial solution y satisfies
α^q(a) = y^s(a) for a unique 1 <= s <= p − 1 and is then forced to be

    y(α^i(a)) = α^(s̄(i)·q + i)(a),     s̄(i) = (2^i · s)^(-1) mod p

with s̄(i) taken in 1..p − 1.  The p − 1 choices of s together with the
identity are all the solutions, and they are the powers of any one
non-trivial member.
"""
from __future__ import annotations

import structlog

from permeq.analysis.cycles import cycle_type
from permeq.certify.number_theory import is_prime, mersenne_divisible, two_adic_split
from permeq.core.permutation import Permutation, identity, power
from permeq.exceptions import PreconditionError, VerificationError
from permeq.solutions import Equation, Method, SolutionSet

logger = structlog.get_logger(__name__)


def b2_parameters(n: int) -> tuple[int, int]:
    """Return (p, m) with n = p·2^m and p | 2^(2^m) − 1.

    Raises:
        PreconditionError: n has no such decomposition.
    """
    m, p = two_adic_split(n)
    if p < 3 or not is_prime(p):
        raise PreconditionError(f"n = {n} is an odd prime times a power of two")
    if m < 1 or not mersenne_divisible(p, 2**m):
        raise PreconditionError(f"p = {p} divides 2^(2^{m}) - 1")
    return p, m


def _check_cycle(alpha: Permutation) -> None:
    if len(alpha.cycles()) != 1:
        raise PreconditionError("alpha is a single n-cycle")


def b2_solution(alpha: Permutation, a: int = 1, s: int = 1) -> Permutation:
    """Build the solution with parameter *s* anchored at point *a*.

    Raises:
        PreconditionError: α is not an admissible n-cycle, a ∉ 1..n, or
            s ∉ 1..p − 1.
        VerificationError: The result fails the equation or its cycle type.
    """
    _check_cycle(alpha)
    n = alpha.degree
    p, m = b2_parameters(n)
    if not 1 <= a <= n:
        raise PreconditionError(f"anchor a = {a} lies in 1..{n}")
    if not 1 <= s <= p - 1:
        raise PreconditionError(f"s = {s} lies in 1..{p - 1}")
    q = 2**m

    orbit = [a - 1]
    for _ in range(n - 1):
        orbit.append(alpha.table[orbit[-1]])

    table = [0] * n
    for i in range(n):
        s_bar = pow(pow(2, i, p) * s % p, -1, p)
        table[orbit[i]] = orbit[(s_bar * q + i) % n]

    y = Permutation(tuple(table))
    if not Equation.starstar(alpha).holds(y):
        raise VerificationError(f"B2 candidate {y} (s={s}, a={a}) fails the equation.")
    ytype = cycle_type(y)
    if ytype.partition != (p,) * q:
        raise VerificationError(f"B2 candidate {y} has type {ytype}, expected t_{p} = {q}.")
    return y


def b2_all_solutions(alpha: Permutation) -> SolutionSet:
    """All p solutions: the identity and b2_solution(α, 1, s) for 1 <= s <= p − 1.

    Raises:
        PreconditionError: α is not an admissible n-cycle.
        VerificationError: The set is not the cyclic group of a member.
    """
    _check_cycle(alpha)
    p, m = b2_parameters(alpha.degree)
    members = [identity(alpha.degree)]
    members.extend(b2_solution(alpha, 1, s) for s in range(1, p))

    generated = {power(members[1], e) for e in range(p)}
    if generated != set(members):
        raise VerificationError(f"B2 solutions for n={alpha.degree} are not the powers of one member.")

    logger.info("b2_solutions_built", n=alpha.degree, p=p, m=m, solutions=len(members))
    return SolutionSet.build(Equation.starstar(alpha), members, Method.CONSTRUCTED)
