"""Solve and certify the conjugate equation α∘y∘α⁻¹ = y² in S_n."""
from permeq.certify import certify, certify_a1, certify_a2, certify_a3_cyclic, is_certified_trivial
from permeq.construct import b1_construct, b2_all_solutions, construct_cyclic, transport_solution
from permeq.core import Permutation, format_cycles, parse_cycles
from permeq.search import (
    enumerate_naive,
    enumerate_pruned,
    solve_star,
    solve_starstar,
    square_roots_all,
)
from permeq.solutions import Equation, Method, SolutionSet

__version__ = "0.1.0"

__all__ = [
    "Equation",
    "Method",
    "Permutation",
    "SolutionSet",
    "b1_construct",
    "b2_all_solutions",
    "certify",
    "certify_a1",
    "certify_a2",
    "certify_a3_cyclic",
    "construct_cyclic",
    "enumerate_naive",
    "enumerate_pruned",
    "format_cycles",
    "is_certified_trivial",
    "parse_cycles",
    "solve_star",
    "solve_starstar",
    "square_roots_all",
    "transport_solution",
]
