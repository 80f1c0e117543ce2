""" posmat/__init__.py """

from .MPoly import MPoly, RationalPoint
from .PolyMatrix import PolyMatrix, SymPolyMatrix
from .Diagonalization import Diagonalization, diagonalize
from .GeneratorSet import GeneratorSet, scalarize, preorder_generators
from .SearchBudget import SearchBudget
from .InstanceTranslator import Instance, InstanceTranslator
from .psd_witness import psd_witness
from .sos import (
    SearchResult,
    sos_decompose,
    artin_search,
    cone_search,
    ks_search,
    archimedean_check,
    bounded_element_check,
)
from .certificates import verify_any, certificate_to_document, certificate_from_document
from .analyzer import full_report, compactness_probe, bhc_check, zero_analysis
from .errors import (
    PosmatError,
    ParseError,
    SchemaError,
    VariableContextError,
    DimensionError,
    CertificateError,
    InvariantBreach,
)

from .version import __version__

__all__ = [
    "MPoly",
    "RationalPoint",
    "PolyMatrix",
    "SymPolyMatrix",
    "Diagonalization",
    "diagonalize",
    "GeneratorSet",
    "scalarize",
    "preorder_generators",
    "SearchBudget",
    "Instance",
    "InstanceTranslator",
    "psd_witness",
    "SearchResult",
    "sos_decompose",
    "artin_search",
    "cone_search",
    "ks_search",
    "archimedean_check",
    "bounded_element_check",
    "verify_any",
    "certificate_to_document",
    "certificate_from_document",
    "full_report",
    "compactness_probe",
    "bhc_check",
    "zero_analysis",
    "PosmatError",
    "ParseError",
    "SchemaError",
    "VariableContextError",
    "DimensionError",
    "CertificateError",
    "InvariantBreach",
    "__version__",
]
