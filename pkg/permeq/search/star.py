"""Solutions of α∘x = x∘α∘x∘α via the substitution x = y∘α⁻¹."""
from __future__ import annotations

from permeq.core.permutation import Permutation, compose, inverse
from permeq.search.solver import solve_starstar
from permeq.solutions import Equation, SolutionSet


def solve_star(alpha: Permutation, strategy: str = "auto", *, workers: int | None = None) -> SolutionSet:
    """Every x with α∘x = x∘α∘x∘α, as y∘α⁻¹ over the solutions y of the conjugate equation."""
    inner = solve_starstar(alpha, 2, strategy, workers=workers)
    alpha_inv = inverse(alpha)
    return SolutionSet.build(
        Equation.star(alpha),
        (compose(y, alpha_inv) for y in inner),
        inner.method,
        inner.stats,
    )
