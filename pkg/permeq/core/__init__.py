from permeq.core.notation import format_cycles, infer_degree, parse_cycles
from permeq.core.permutation import (
    Cycle,
    Permutation,
    compose,
    conjugate,
    cyclic,
    from_cycles,
    identity,
    inverse,
    order,
    power,
    restrict,
)

__all__ = [
    "Cycle",
    "Permutation",
    "compose",
    "conjugate",
    "cyclic",
    "format_cycles",
    "from_cycles",
    "identity",
    "infer_degree",
    "inverse",
    "order",
    "parse_cycles",
    "power",
    "restrict",
]
