from pydantic import BaseModel, Field

from permeq.construct.b1 import B1Instance
from permeq.construct.transport import TransportWitness
from permeq.core.permutation import Permutation


class TransportOut(BaseModel):
    """A solution carried from β onto a target α by τ with τβτ⁻¹ = α."""
    source: str
    target: str
    tau: str
    alignment: list[tuple[str, str]]
    solution: str

    @classmethod
    def from_domain(cls, witness: TransportWitness, solution: Permutation) -> "TransportOut":
        return cls(
            source    = str(witness.source),
            target    = str(witness.target),
            tau       = str(witness.tau),
            alignment = [(str(a), str(b)) for a, b in witness.alignment],
            solution  = str(solution),
        )


class B1InstanceOut(BaseModel):
    """A verified pair (β, y) with β an n-cycle and y of type p^(n/p)."""
    n: int = Field(ge=3)
    p: int = Field(ge=3)
    q: int = Field(ge=1)
    beta: str
    y: str
    labeling: str = "(i, j) -> (i - 1) * p + j"
    verified: bool = True
    transport: TransportOut | None = None

    @classmethod
    def from_domain(cls, instance: B1Instance, transport: TransportOut | None = None) -> "B1InstanceOut":
        return cls(
            n         = instance.n,
            p         = instance.p,
            q         = instance.q,
            beta      = str(instance.beta),
            y         = str(instance.y),
            transport = transport,
        )


class B2SolutionOut(BaseModel):
    """One non-trivial solution for an admissible n-cycle, n = p·2^m."""
    n: int
    p: int
    m: int
    s: int
    alpha: str
    solution: str


class B1ParameterOut(BaseModel):
    n: int
    p: int
