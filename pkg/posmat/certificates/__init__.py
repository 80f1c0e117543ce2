from .SosCert import SosCert, DenominatorCert
from .ConeCert import (
    ScalarConeCert,
    MatrixConeCert,
    GeneratorTerm,
    WeightedTerm,
    MODULE,
    PREORDER,
    MATRIX_GENERATORS,
    MODULE_POWER,
    PREORDER_POWER,
)
from .KsCert import KsCert, STRICT, PSD_FORM, ZERO, EMPTY, KS_FORMS
from .verification import (
    VerificationResult,
    verify_scalar_cert,
    verify_matrix_cert,
    verify_ks,
    verify_denominator_cert,
    verify_any,
)
from .transforms import (
    embed_diagonal,
    archimedean_lift,
    trace_down,
    bounded_transform,
    enlarge_radius,
    ball_polynomial,
    linear_bounds_from_ball,
    sum_of_hermitian_squares,
    over_preorder_generators,
    SQUARE_TO_LINEAR,
    LINEAR_TO_SQUARE,
)
from .serialization import (
    CERT_VERSION,
    certificate_to_document,
    certificate_from_document,
)

__all__ = [
    "SosCert",
    "DenominatorCert",
    "ScalarConeCert",
    "MatrixConeCert",
    "GeneratorTerm",
    "WeightedTerm",
    "MODULE",
    "PREORDER",
    "MATRIX_GENERATORS",
    "MODULE_POWER",
    "PREORDER_POWER",
    "KsCert",
    "STRICT",
    "PSD_FORM",
    "ZERO",
    "EMPTY",
    "KS_FORMS",
    "VerificationResult",
    "verify_scalar_cert",
    "verify_matrix_cert",
    "verify_ks",
    "verify_denominator_cert",
    "verify_any",
    "embed_diagonal",
    "archimedean_lift",
    "trace_down",
    "bounded_transform",
    "enlarge_radius",
    "ball_polynomial",
    "linear_bounds_from_ball",
    "sum_of_hermitian_squares",
    "over_preorder_generators",
    "SQUARE_TO_LINEAR",
    "LINEAR_TO_SQUARE",
    "CERT_VERSION",
    "certificate_to_document",
    "certificate_from_document",
]
