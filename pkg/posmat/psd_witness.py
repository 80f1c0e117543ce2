"""Global positive semidefiniteness: b^2*F as a sum of hermitian squares, or
a rational point where F is not PSD."""

import logging

from .certificates import DenominatorCert, sum_of_hermitian_squares
from .Diagonalization import diagonalize
from .errors import DimensionError
from .MPoly import MPoly
from .sampling import sample_points
from .SearchBudget import SearchBudget
from .sos import COUNTEREXAMPLE, SearchResult, artin_search, sos_decompose

logger = logging.getLogger(__name__)


def find_counterexample(F, count=60, seed=0):
    """First sample point (grid first, then seeded random) where F(p) is
    not PSD, or None."""
    for point in sample_points(F.vars, count, seed=seed):
        if F.eval_psd(point) in ("indefinite", "negative"):
            return point
    return None


def _entry_certificate(d, budget):
    """SosCert of d, or a DenominatorCert q*d = p, or None."""
    result = sos_decompose(d, budget)
    if result:
        return result.certificate
    result = artin_search(d, budget)
    if result:
        return result.certificate
    return None


def psd_witness(F, budget=None, sample_count=60):
    """Certify that F is PSD everywhere, or refute it at a rational point.

    F is diagonalized as b^2*F = Xplus*D*Xplus^T. Every diagonal entry gets
    a sum of squares, or a denominator identity q_i*d_i = p_i; in the latter
    case b is multiplied by Q = prod q_i, since Q^2*d_i = p_i*q_i*prod_{j!=i}
    q_j^2 is again a sum of squares.

    Returns a SearchResult: ``certified`` with a MatrixConeCert of b^2*F
    (``b`` is in the details), ``counterexample`` with the point, or
    ``inconclusive``.
    """
    budget = budget or SearchBudget()
    if not F.is_symmetric():
        raise DimensionError("psd_witness needs a symmetric matrix")
    point = find_counterexample(F, sample_count, seed=budget.seed)
    if point is not None:
        logger.info("F is not PSD at %s", point)
        return SearchResult(COUNTEREXAMPLE, witness=point, budget=budget)
    decomposition = diagonalize(F)
    entries = []
    for i, d in enumerate(decomposition.diag):
        cert = _entry_certificate(d, budget)
        if cert is None:
            logger.info("no certificate for diagonal entry %d: %s", i, d)
            return SearchResult.inconclusive(budget, failed_entries=[i])
        entries.append(cert)
    denominators = [
        c.q.expand() for c in entries
        if isinstance(c, DenominatorCert) and c.q.expand() != MPoly.one(F.vars)
    ]
    diag_sos = []
    for cert in entries:
        if isinstance(cert, DenominatorCert):
            q = cert.q.expand()
            sos = cert.p.times(cert.q)
            own = False
            for other in denominators:
                if other == q and not own:
                    own = True
                else:
                    sos = sos.times_square(other)
        else:
            sos = cert
            for other in denominators:
                sos = sos.times_square(other)
        diag_sos.append(sos)
    b = decomposition.b
    for q in denominators:
        b = b * q
    cert = sum_of_hermitian_squares(decomposition.Xplus, diag_sos, b, F)
    return SearchResult.certified(cert, budget, b=str(b))

