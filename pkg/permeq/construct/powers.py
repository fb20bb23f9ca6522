"""Power solutions of α∘y∘α⁻¹ = y^k.

y = α^t commutes with α, so it solves the equation exactly when
α^t = α^(tk), i.e. ord(α) | t·(k − 1).  A non-trivial such t exists iff
gcd(k − 1, ord(α)) != 1.
"""
from __future__ import annotations

from permeq.core.permutation import Permutation, order, power
from permeq.exceptions import InputError
from permeq.solutions import Equation, Method, SolutionSet


def power_solutions(alpha: Permutation, k: int) -> SolutionSet:
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}.")
    ord_alpha = order(alpha)
    members = [power(alpha, t) for t in range(ord_alpha) if t * (k - 1) % ord_alpha == 0]
    return SolutionSet.build(Equation.starstar(alpha, k), members, Method.CONSTRUCTED)
