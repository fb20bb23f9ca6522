"""
permeq/solutions.py

Equations and the SolutionSet result type shared by every solver.

Equation kinds
--------------
    starstar   α∘y∘α⁻¹ = y^k           (k = 2 is the conjugate equation)
    star       α∘x = x∘α∘x∘α           (solutions x = y∘α⁻¹)
    root       y∘y = σ

A SolutionSet never trusts its producer: build() re-checks every member
against the equation, drops duplicates and sorts canonically (identity
first, then by canonical cycle notation).
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum

from permeq.core.permutation import Permutation, compose, identity, inverse, power
from permeq.exceptions import DegreeMismatchError, InputError, VerificationError


class EquationKind(str, Enum):
    STARSTAR = "starstar"
    STAR = "star"
    ROOT = "root"


class Method(str, Enum):
    NAIVE = "naive"
    PRUNED = "pruned"
    CONSTRUCTED = "constructed"
    CERTIFIED = "certified"


def starstar_holds(at: Sequence[int], yt: Sequence[int], k: int = 2) -> bool:
    """Table-level test of α∘y = y^k∘α (equivalent to α∘y∘α⁻¹ = y^k)."""
    if k == 2:
        return all(at[v] == yt[yt[a]] for v, a in zip(yt, at))
    for i, a in enumerate(at):
        image = a
        for _ in range(k):
            image = yt[image]
        if at[yt[i]] != image:
            return False
    return True


@dataclass(frozen=True)
class Equation:
    kind: EquationKind
    subject: Permutation  # α for starstar/star, σ for root
    k: int = 2

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InputError(f"k must be at least 1, got {self.k}.")

    @classmethod
    def starstar(cls, alpha: Permutation, k: int = 2) -> Equation:
        return cls(EquationKind.STARSTAR, alpha, k)

    @classmethod
    def star(cls, alpha: Permutation) -> Equation:
        return cls(EquationKind.STAR, alpha, 2)

    @classmethod
    def root(cls, sigma: Permutation) -> Equation:
        return cls(EquationKind.ROOT, sigma, 2)

    @property
    def degree(self) -> int:
        return self.subject.degree

    def holds(self, candidate: Permutation) -> bool:
        if candidate.degree != self.degree:
            raise DegreeMismatchError(self.degree, candidate.degree)
        s = self.subject
        if self.kind is EquationKind.STARSTAR:
            return starstar_holds(s.table, candidate.table, self.k)
        if self.kind is EquationKind.STAR:
            # α∘x = x∘α∘x∘α
            xa = compose(candidate, s)
            return compose(s, candidate) == compose(xa, xa)
        return power(candidate, 2) == s

    def trivial(self) -> Permutation | None:
        """The solution every instance has, if any (1 for starstar, α⁻¹ for star)."""
        if self.kind is EquationKind.STARSTAR:
            return identity(self.degree)
        if self.kind is EquationKind.STAR:
            return inverse(self.subject)
        return None

    def describe(self) -> str:
        if self.kind is EquationKind.STARSTAR:
            return f"alpha∘y∘alpha^-1 = y^{self.k}"
        if self.kind is EquationKind.STAR:
            return "alpha∘x = x∘alpha∘x∘alpha"
        return "y∘y = sigma"


@dataclass
class SearchStats:
    """Counters filled in by the solver that produced a SolutionSet."""

    candidates: int = 0
    candidate_types: int = 0
    elapsed_s: float = 0.0

    def __add__(self, other: SearchStats) -> SearchStats:
        return SearchStats(
            candidates      = self.candidates      + other.candidates,
            candidate_types = self.candidate_types + other.candidate_types,
            elapsed_s       = self.elapsed_s       + other.elapsed_s,
        )

    def as_dict(self) -> dict[str, float | int]:
        return {
            "candidates":      self.candidates,
            "candidate_types": self.candidate_types,
            "elapsed_s":       round(self.elapsed_s, 6),
        }


@dataclass(frozen=True)
class SolutionSet:
    equation: Equation
    solutions: tuple[Permutation, ...]
    method: Method
    stats: SearchStats = field(default_factory=SearchStats)

    @classmethod
    def build(
        cls,
        equation: Equation,
        members: Iterable[Permutation],
        method: Method,
        stats: SearchStats | None = None,
    ) -> SolutionSet:
        """Verify, deduplicate and canonically sort *members*.

        Raises:
            VerificationError: A member fails the equation, or the trivial
                solution is missing.
        """
        unique: dict[Permutation, None] = {}
        for y in members:
            if not equation.holds(y):
                raise VerificationError(f"{y} does not satisfy {equation.describe()}.")
            unique[y] = None
        trivial = equation.trivial()
        if trivial is not None and trivial not in unique:
            raise VerificationError(f"Trivial solution {trivial} missing from {method.value} result.")
        ordered = tuple(sorted(unique, key=Permutation.canonical_key))
        return cls(equation, ordered, method, stats or SearchStats())

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.solutions)

    def __contains__(self, item: object) -> bool:
        return item in self.solutions

    def nontrivial(self) -> list[Permutation]:
        trivial = self.equation.trivial()
        return [y for y in self.solutions if y != trivial]
