from pydantic import BaseModel, ConfigDict, Field

from permeq.certify.certifier import Certificate, Verdict, replay
from permeq.core.permutation import Permutation


class PairRecordOut(BaseModel):
    """One (d, r) pair of an A1 certificate."""
    model_config = ConfigDict(from_attributes=True)

    d: int = Field(ge=1)
    r: int = Field(ge=3)
    member: int
    gd: int = Field(ge=0)
    gcd: int = Field(ge=1)
    passes: bool


class PrimeCheckOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    length: int
    prime: int
    exponent: int
    divisible: bool


class FailureOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    reason: str
    d: int | None = None
    r: int | None = None
    length: int | None = None
    prime: int | None = None


class CertificateOut(BaseModel):
    """Replayable triviality certificate."""

    theorem: str
    verdict: str
    degree: int
    vacuous: bool
    lengths: list[tuple[int, int]] = Field(default_factory=list)
    pairs: list[PairRecordOut] = Field(default_factory=list)
    checks: list[PrimeCheckOut] = Field(default_factory=list)
    failure: FailureOut | None = None
    replayed: str

    @classmethod
    def from_domain(cls, cert: Certificate) -> "CertificateOut":
        return cls(
            theorem  = cert.theorem.value,
            verdict  = cert.verdict.value,
            degree   = cert.degree,
            vacuous  = cert.vacuous,
            lengths  = [tuple(x) for x in cert.lengths],
            pairs    = [PairRecordOut.model_validate(p) for p in cert.pairs],
            checks   = [PrimeCheckOut.model_validate(c) for c in cert.checks],
            failure  = FailureOut.model_validate(cert.failure) if cert.failure else None,
            replayed = replay(cert).value,
        )

    @property
    def only_trivial(self) -> bool:
        return self.verdict == Verdict.ONLY_TRIVIAL.value


class CertifyReport(BaseModel):
    """Every certificate issued for one α, plus the combined verdict."""

    alpha: str
    degree: int
    verdict: str
    certified_by: list[str]
    certificates: list[CertificateOut]

    @classmethod
    def from_domain(cls, alpha: Permutation, certs: list[Certificate]) -> "CertifyReport":
        proofs = [c.theorem.value for c in certs if c.only_trivial]
        verdict = Verdict.ONLY_TRIVIAL if proofs else Verdict.INCONCLUSIVE
        return cls(
            alpha        = str(alpha),
            degree       = alpha.degree,
            verdict      = verdict.value,
            certified_by = proofs,
            certificates = [CertificateOut.from_domain(c) for c in certs],
        )
