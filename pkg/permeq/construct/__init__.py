from permeq.construct.b1 import B1Instance, b1_construct, b1_parameters, construct_cyclic, verify_b1
from permeq.construct.b2 import b2_all_solutions, b2_parameters, b2_solution
from permeq.construct.powers import power_solutions
from permeq.construct.transport import (
    NO_SOLUTION,
    NoSolution,
    TransportWitness,
    conjugacy_transporter,
    transport_solution,
)

__all__ = [
    "B1Instance",
    "NO_SOLUTION",
    "NoSolution",
    "TransportWitness",
    "b1_construct",
    "b1_parameters",
    "b2_all_solutions",
    "b2_parameters",
    "b2_solution",
    "conjugacy_transporter",
    "construct_cyclic",
    "power_solutions",
    "transport_solution",
    "verify_b1",
]
