from permeq.models.schemas.certificate import (
    CertificateOut,
    CertifyReport,
    FailureOut,
    PairRecordOut,
    PrimeCheckOut,
)
from permeq.models.schemas.construction import (
    B1InstanceOut,
    B1ParameterOut,
    B2SolutionOut,
    TransportOut,
)
from permeq.models.schemas.solution import EquationOut, SearchStatsOut, SolutionSetOut
from permeq.models.schemas.survey import SURVEY_COLUMNS, SurveyRow

__all__ = [
    "CertificateOut",
    "CertifyReport",
    "PairRecordOut",
    "PrimeCheckOut",
    "FailureOut",
    "SolutionSetOut",
    "EquationOut",
    "SearchStatsOut",
    "B1InstanceOut",
    "B1ParameterOut",
    "B2SolutionOut",
    "TransportOut",
    "SurveyRow",
    "SURVEY_COLUMNS",
]
