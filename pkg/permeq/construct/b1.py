"""
permeq/construct/b1.py

Explicit non-trivial solutions for a cyclic α.

Let p >= 3 be a prime with p | n and p | 2^(n/p) − 1, and q = n/p.  On the
pair set P_n = {(i, j) : 1 <= i <= q, 1 <= j <= p} define

    β(i, j) = (i + 1, 2j)        for 1 <= i <= q − 1
    β(q, j) = (1, 2j + 1)
    y(i, j) = (i, j + 1)

with second coordinates reduced into 1..p modulo p.  β is a single n-cycle,
y consists of q disjoint p-cycles, and β∘y = y²∘β.  Pairs are relabelled
onto 1..n by (i, j) ↦ (i − 1)·p + j.
"""
from __future__ import annotations

from dataclasses import dataclass

import structlog

from permeq.analysis.cycles import cycle_type
from permeq.certify.number_theory import is_prime, mersenne_divisible, odd_prime_divisors
from permeq.construct.transport import transport_solution
from permeq.core.permutation import Permutation, compose, power
from permeq.exceptions import PreconditionError, VerificationError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class B1Instance:
    n: int
    p: int
    q: int
    beta: Permutation
    y: Permutation

    def label(self, i: int, j: int) -> int:
        """Point of 1..n standing for the pair (i, j)."""
        return (i - 1) * self.p + j


def b1_parameters(limit: int) -> list[tuple[int, int]]:
    """Every (n, p) with 3 <= n <= limit meeting the construction's precondition."""
    return [
        (n, p)
        for n in range(3, limit + 1)
        for p in odd_prime_divisors(n)
        if mersenne_divisible(p, n // p)
    ]


def _check_preconditions(n: int, p: int) -> None:
    if p < 3 or not is_prime(p):
        raise PreconditionError(f"p = {p} is an odd prime")
    if n < 3 or n % p:
        raise PreconditionError(f"p = {p} divides n = {n}")
    if not mersenne_divisible(p, n // p):
        raise PreconditionError(f"p = {p} divides 2^{n // p} - 1")


def b1_construct(n: int, p: int) -> B1Instance:
    """Build and verify the pair (β, y) on P_n relabelled onto 1..n.

    Raises:
        PreconditionError: p is not an odd prime, p ∤ n, or p ∤ 2^(n/p) − 1.
        VerificationError: A structural check on the result failed.
    """
    _check_preconditions(n, p)
    q = n // p

    def wrap(j: int) -> int:
        return (j - 1) % p + 1

    def label(i: int, j: int) -> int:
        return (i - 1) * p + j

    beta = [0] * n
    y = [0] * n
    for i in range(1, q + 1):
        for j in range(1, p + 1):
            src = label(i, j) - 1
            if i < q:
                beta[src] = label(i + 1, wrap(2 * j)) - 1
            else:
                beta[src] = label(1, wrap(2 * j + 1)) - 1
            y[src] = label(i, wrap(j + 1)) - 1

    instance = B1Instance(n=n, p=p, q=q, beta=Permutation(tuple(beta)), y=Permutation(tuple(y)))
    verify_b1(instance)
    logger.info("b1_instance_built", n=n, p=p, q=q)
    return instance


def verify_b1(instance: B1Instance) -> None:
    """Re-check β∘y = y²∘β, β an n-cycle, y made of q p-cycles."""
    beta, y = instance.beta, instance.y
    if compose(beta, y) != compose(power(y, 2), beta):
        raise VerificationError(f"beta∘y != y^2∘beta for n={instance.n}, p={instance.p}.")
    if len(beta.cycles()) != 1:
        raise VerificationError(f"beta is not a single {instance.n}-cycle.")
    ytype = cycle_type(y)
    if ytype.count(instance.p) != instance.q or ytype.partition != (instance.p,) * instance.q:
        raise VerificationError(f"y does not consist of {instance.q} cycles of length {instance.p}.")


def construct_cyclic(alpha: Permutation, p: int | None = None) -> Permutation:
    """A non-trivial solution of (∗∗)_α for an n-cycle α, via B1 plus transport.

    Raises:
        PreconditionError: α is not an n-cycle, or no admissible prime exists.
    """
    n = alpha.degree
    if len(alpha.cycles()) != 1:
        raise PreconditionError("alpha is a single n-cycle")
    if p is None:
        admissible = [pp for pp in odd_prime_divisors(n) if mersenne_divisible(pp, n // pp)]
        if not admissible:
            raise PreconditionError(f"some odd prime p | {n} divides 2^({n}/p) - 1")
        p = admissible[0]
    instance = b1_construct(n, p)
    return transport_solution(instance.beta, instance.y, alpha)
