from pydantic import BaseModel, Field

from permeq.solutions import SolutionSet


class SearchStatsOut(BaseModel):
    """Search counters; wall-clock time is logged, never reported, so output is byte-stable."""
    candidates: int = Field(ge=0)
    candidate_types: int = Field(ge=0)


class EquationOut(BaseModel):
    """Which equation a SolutionSet solves."""
    kind: str
    subject: str
    degree: int
    k: int
    text: str


class SolutionSetOut(BaseModel):
    """Solutions in canonical cycle notation, identity first."""
    equation: EquationOut
    method: str
    count: int
    solutions: list[str]
    stats: SearchStatsOut

    @classmethod
    def from_domain(cls, result: SolutionSet) -> "SolutionSetOut":
        eq = result.equation
        return cls(
            equation  = EquationOut(
                kind    = eq.kind.value,
                subject = str(eq.subject),
                degree  = eq.degree,
                k       = eq.k,
                text    = eq.describe(),
            ),
            method    = result.method.value,
            count     = len(result),
            solutions = [str(y) for y in result],
            stats     = SearchStatsOut(
                candidates      = result.stats.candidates,
                candidate_types = result.stats.candidate_types,
            ),
        )
