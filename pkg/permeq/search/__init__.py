from permeq.search.candidates import candidate_types, odd_partitions, permutations_of_type, tables_of_type
from permeq.search.enumerator import enumerate_naive, enumerate_pruned
from permeq.search.roots import square_root_exists, square_roots_all, square_roots_naive
from permeq.search.solver import SOLVER_REGISTRY, get_solver, solve_starstar
from permeq.search.star import solve_star

__all__ = [
    "SOLVER_REGISTRY",
    "candidate_types",
    "enumerate_naive",
    "enumerate_pruned",
    "get_solver",
    "odd_partitions",
    "permutations_of_type",
    "solve_star",
    "solve_starstar",
    "square_root_exists",
    "square_roots_all",
    "square_roots_naive",
    "tables_of_type",
]
