"""
permeq/construct/transport.py

Conjugacy transport.

Two permutations are conjugate in S_n exactly when they share a cycle type.
conjugacy_transporter() builds one witness τ with τ∘source∘τ⁻¹ = target by
aligning cycles of equal length in canonical order: the k-th source cycle of
length ℓ goes to the k-th target cycle of length ℓ, minimum to minimum.

Because conjugation is an automorphism, a solution y of (∗∗)_β becomes the
solution τ∘y∘τ⁻¹ of (∗∗)_α whenever τ∘β∘τ⁻¹ = α (transport_solution).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import structlog

from permeq.analysis.cycles import cycle_decomposition, same_type
from permeq.core.permutation import Cycle, Permutation, conjugate
from permeq.exceptions import DegreeMismatchError, PreconditionError, VerificationError
from permeq.solutions import Equation

logger = structlog.get_logger(__name__)


class NoSolution:
    """Returned by conjugacy_transporter() when the cycle types differ."""

    _instance: NoSolution | None = None

    def __new__(cls) -> NoSolution:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "NoSolution"


NO_SOLUTION = NoSolution()


@dataclass(frozen=True)
class TransportWitness:
    source: Permutation
    target: Permutation
    tau: Permutation
    alignment: tuple[tuple[Cycle, Cycle], ...]


def conjugacy_transporter(source: Permutation, target: Permutation) -> TransportWitness | NoSolution:
    """Return τ with conjugate(source, τ) == target, or NO_SOLUTION.

    Raises:
        DegreeMismatchError: source and target have different degrees.
    """
    if source.degree != target.degree:
        raise DegreeMismatchError(source.degree, target.degree)
    if not same_type(source, target):
        return NO_SOLUTION

    by_length: dict[int, list[Cycle]] = defaultdict(list)
    for c in cycle_decomposition(target):
        by_length[len(c)].append(c)

    taken: dict[int, int] = defaultdict(int)
    table = [0] * source.degree
    alignment: list[tuple[Cycle, Cycle]] = []
    for src in cycle_decomposition(source):
        length = len(src)
        tgt = by_length[length][taken[length]]
        taken[length] += 1
        alignment.append((src, tgt))
        for a, b in zip(src.points, tgt.points):
            table[a - 1] = b - 1

    tau = Permutation(tuple(table))
    if conjugate(source, tau) != target:
        raise VerificationError(f"Transporter {tau} does not carry {source} to {target}.")
    return TransportWitness(source=source, target=target, tau=tau, alignment=tuple(alignment))


def transport_solution(beta: Permutation, y: Permutation, alpha: Permutation) -> Permutation:
    """Carry a solution *y* of (∗∗)_β to the solution τ∘y∘τ⁻¹ of (∗∗)_α.

    Raises:
        PreconditionError: y does not solve (∗∗)_β, or β and α differ in type.
        VerificationError: The transported permutation fails (∗∗)_α.
    """
    if not Equation.starstar(beta).holds(y):
        raise PreconditionError("y solves beta∘y∘beta^-1 = y^2")
    witness = conjugacy_transporter(beta, alpha)
    if isinstance(witness, NoSolution):
        raise PreconditionError("beta and alpha have the same cycle type")

    z = conjugate(y, witness.tau)
    if not Equation.starstar(alpha).holds(z):
        raise VerificationError(f"Transported solution {z} fails alpha∘z∘alpha^-1 = z^2.")
    logger.debug("solution_transported", n=alpha.degree, source=str(y), result=str(z))
    return z
