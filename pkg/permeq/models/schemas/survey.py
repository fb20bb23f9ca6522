from pydantic import BaseModel, Field, model_validator

from permeq.analysis.cycles import CycleType
from permeq.certify.certifier import Certificate, Verdict
from permeq.solutions import SolutionSet

# Column order of the CSV survey file.
SURVEY_COLUMNS = ("n", "partition", "cert_a1", "cert_a2", "solution_count", "example_solution")


class SurveyRow(BaseModel):
    """One cycle type of S_n: certificate verdicts against the true solution count."""
    n: int = Field(ge=1)
    partition: list[int]
    cert_a1: str
    cert_a2: str
    solution_count: int = Field(ge=1)
    example_solution: str | None = None

    @model_validator(mode="after")
    def _certificate_agrees(self) -> "SurveyRow":
        certified = Verdict.ONLY_TRIVIAL.value in (self.cert_a1, self.cert_a2)
        if certified and self.solution_count != 1:
            raise ValueError(
                f"Type {self.partition} is certified trivial but has {self.solution_count} solutions."
            )
        return self

    @classmethod
    def from_domain(
        cls,
        ctype: CycleType,
        a1: Certificate,
        a2: Certificate,
        result: SolutionSet,
    ) -> "SurveyRow":
        nontrivial = result.nontrivial()
        return cls(
            n                = ctype.degree,
            partition        = list(ctype.partition),
            cert_a1          = a1.verdict.value,
            cert_a2          = a2.verdict.value,
            solution_count   = len(result),
            example_solution = str(nontrivial[0]) if nontrivial else None,
        )

    def csv_record(self) -> list[str]:
        return [
            str(self.n),
            " ".join(map(str, self.partition)),
            self.cert_a1,
            self.cert_a2,
            str(self.solution_count),
            self.example_solution or "",
        ]
