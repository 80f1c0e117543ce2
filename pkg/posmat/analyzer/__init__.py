""" posmat.analyzer: hypotheses of the positivity theorems """

from .ApplicabilityReport import (
    ApplicabilityReport,
    TheoremEntry,
    Hypothesis,
    VERIFIED,
    REFUTED,
    USER_ATTESTED,
    UNCHECKED,
)
from .zeros import (
    ZeroRecord,
    DirectionAnalysis,
    zero_analysis,
    matrix_zero_analysis,
    diagonal_directions,
    quadratic_form,
    prescan_zeros,
    hessian_at,
)
from .bhc import BhcRecord, bhc_check
from .compactness import (
    CompactnessResult,
    Ray,
    compactness_probe,
    find_unbounded_ray,
    nonnegative_beyond,
    COMPACT,
    UNBOUNDED,
    INCONCLUSIVE,
)
from .records import AnalysisContext, schweighofer_record
from .report import full_report

__all__ = [
    "ApplicabilityReport",
    "TheoremEntry",
    "Hypothesis",
    "VERIFIED",
    "REFUTED",
    "USER_ATTESTED",
    "UNCHECKED",
    "ZeroRecord",
    "DirectionAnalysis",
    "zero_analysis",
    "matrix_zero_analysis",
    "diagonal_directions",
    "quadratic_form",
    "prescan_zeros",
    "hessian_at",
    "BhcRecord",
    "bhc_check",
    "CompactnessResult",
    "Ray",
    "compactness_probe",
    "find_unbounded_ray",
    "nonnegative_beyond",
    "COMPACT",
    "UNBOUNDED",
    "INCONCLUSIVE",
    "AnalysisContext",
    "schweighofer_record",
    "full_report",
]
