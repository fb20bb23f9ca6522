from permeq.analysis.cycles import (
    CycleType,
    cycle_decomposition,
    cycle_type,
    partitions,
    same_type,
)
from permeq.analysis.d_range import DRange, d_range, d_range_naive
from permeq.analysis.induced import (
    InducedPermutation,
    base_sets,
    descent_cycle,
    fixed_set_decomposition,
    induced_index_permutation,
)

__all__ = [
    "CycleType",
    "DRange",
    "InducedPermutation",
    "base_sets",
    "cycle_decomposition",
    "cycle_type",
    "d_range",
    "d_range_naive",
    "descent_cycle",
    "fixed_set_decomposition",
    "induced_index_permutation",
    "partitions",
    "same_type",
]
