"""Exact verification of certificates.

A certificate passes iff the polynomial identity it claims holds exactly;
every product and sum is recomputed here from the certificate's data.
"""

import logging

from ..GeneratorSet import preorder_generators
from ..MPoly import MPoly
from ..PolyMatrix import PolyMatrix, mat_mul
from ..SearchBudget import SearchBudget
from .ConeCert import (
    MATRIX_GENERATORS,
    MODULE,
    MODULE_POWER,
    PREORDER,
    MatrixConeCert,
    ScalarConeCert,
)
from .KsCert import EMPTY, PSD_FORM, STRICT, ZERO, KsCert
from .SosCert import SosCert

logger = logging.getLogger(__name__)


class VerificationResult:
    """Outcome of a verification: ``passed`` and, on failure, the reason
    and the non-zero residual (polynomial or matrix)."""

    def __init__(self, passed, reason="", residual=None):
        self.passed = passed
        self.reason = reason
        self.residual = residual

    @classmethod
    def success(cls):
        return cls(True)

    @classmethod
    def failure(cls, reason, residual=None):
        logger.debug("verification failed: %s", reason)
        return cls(False, reason, residual)

    def __bool__(self):
        return self.passed

    def to_json(self):
        data = {"passed": self.passed}
        if not self.passed:
            data["reason"] = self.reason
            if isinstance(self.residual, (MPoly, PolyMatrix)):
                data["residual"] = (
                    str(self.residual)
                    if isinstance(self.residual, MPoly)
                    else self.residual.to_json()
                )
        return data

    def __repr__(self):
        if self.passed:
            return "VerificationResult(pass)"
        return "VerificationResult(fail: %s)" % self.reason


def _scalar_generators(gens):
    return [] if gens is None else list(gens.scalar_gens)


def check_scalar_cert(cert, gens, cones=(MODULE, PREORDER)):
    """Structural checks of a scalar certificate (cone, selectors, weights).

    Returns a failing VerificationResult or None.
    """
    if not isinstance(cert, ScalarConeCert):
        return VerificationResult.failure("not a scalar cone certificate")
    if cert.cone not in cones:
        return VerificationResult.failure("cone %s not allowed here" % cert.cone)
    if not cert.selectors_valid(len(_scalar_generators(gens))):
        return VerificationResult.failure("selector outside the generator set")
    if not cert.has_positive_weights():
        return VerificationResult.failure("non-positive sum-of-squares weight")
    return None


def verify_scalar_cert(f, cert, gens, cones=(MODULE, PREORDER)):
    """Check that ``cert`` expands exactly to the polynomial ``f``."""
    problem = check_scalar_cert(cert, gens, cones)
    if problem is not None:
        return problem
    residual = cert.expand(_scalar_generators(gens)) - f
    if not residual.is_zero():
        return VerificationResult.failure("expansion differs from target", residual)
    return VerificationResult.success()


def admissible_generators(cert, gens, product_cap=None):
    """The matrix generators an ``M_gens`` certificate may refer to.

    Without embedded generators these are the matrix generators of
    ``gens``. Embedded generators are accepted only if each is one of those
    or one of :func:`preorder_generators` of ``gens`` (products of at most
    ``product_cap`` forms, by default as many as there are scalar
    generators); an empty list is the cone of sums A^T A. Returns None when
    an embedded generator is not admissible.
    """
    own = [] if gens is None else list(gens.matrix_gens)
    if cert.generators is None:
        return own
    extra = [G for G in cert.generators if G not in own]
    if not extra:
        return cert.generators
    if gens is None:
        return None
    if product_cap is None:
        product_cap = max(SearchBudget.default_max_product_order, len(gens.scalar_gens))
    allowed = preorder_generators(gens, product_cap)
    if any(G not in allowed for G in extra):
        return None
    return cert.generators


def verify_matrix_cert(F, cert, gens):
    """Check that a matrix cone certificate expands exactly to F.

    For the forms ``M_G^n``/``T_G^n`` every scalar weight must also be the
    exact expansion of its own cone certificate (module certificates are
    accepted inside ``T_G^n``, since M_G is contained in T_G).
    """
    if cert.n != F.n:
        return VerificationResult.failure("dimension %d vs %d" % (cert.n, F.n))
    if cert.cone == MATRIX_GENERATORS:
        generators = admissible_generators(cert, gens)
        if generators is None:
            return VerificationResult.failure("embedded generator outside the generator set")
        for term in cert.terms:
            if not 0 <= term.generator <= len(generators):
                return VerificationResult.failure("unknown matrix generator")
            if term.scale <= 0:
                return VerificationResult.failure("non-positive term scale")
            if term.A.n != F.n:
                return VerificationResult.failure("term of the wrong size")
            if term.generator and not generators[term.generator - 1].is_symmetric():
                return VerificationResult.failure("non-symmetric generator")
    else:
        cones = (MODULE,) if cert.cone == MODULE_POWER else (MODULE, PREORDER)
        for index, term in enumerate(cert.terms):
            if term.A.n != F.n:
                return VerificationResult.failure("term of the wrong size")
            check = verify_scalar_cert(term.weight, term.weight_cert, gens, cones)
            if not check:
                return VerificationResult.failure(
                    "weight %d: %s" % (index, check.reason), check.residual
                )
    residual = cert.expand(gens) - F
    if not residual.is_zero():
        return VerificationResult.failure("expansion differs from target", residual)
    return VerificationResult.success()


def verify_ks(F, cert, gens):
    """Check a Krivine-Stengle certificate exactly.

    With Dm = Xminus * F * Xminus^T: ``strict`` checks S*Dm = I + T,
    ``psd`` checks S*Dm = Dm^(2m) + T, ``zero`` checks that T (a diagonal
    of preordering certificates) equals -Dm^(2m), ``empty`` that T = -I.
    """
    n, variables = cert.n, cert.vars
    generators = _scalar_generators(gens)
    expected_s = 0 if cert.form in (ZERO, EMPTY) else n
    if len(cert.S) != expected_s or len(cert.T) != n:
        return VerificationResult.failure("S and T must have %d entries" % n)
    for name, certs in (("S", cert.S), ("T", cert.T)):
        for index, entry in enumerate(certs):
            problem = check_scalar_cert(entry, gens)
            if problem is not None:
                return VerificationResult.failure(
                    "%s[%d]: %s" % (name, index, problem.reason)
                )
    T = PolyMatrix.diagonal(
        [c.expand(generators) for c in cert.T], variables, n=n
    )
    identity = PolyMatrix.identity(n, variables)
    if cert.form == EMPTY:
        residual = T + identity
        reason = "T differs from -I"
    else:
        if F is None or F.n != n:
            return VerificationResult.failure("target of the wrong size")
        # Dm only speaks for F when Xminus is invertible as a matrix over the
        # rational functions
        if cert.Xminus.det().is_zero():
            return VerificationResult.failure("Xminus is singular")
        Dm =F.congruence(cert.Xminus.transpose())
        if cert.form == STRICT:
            left = mat_mul(
                PolyMatrix.diagonal(
                    [c.expand(generators) for c in cert.S], variables, n=n
                ),
                Dm,
            )
            residual = left - identity - T
            reason = "S*Dm differs from I + T"
        elif cert.form == PSD_FORM:
            left = mat_mul(
                PolyMatrix.diagonal(
                    [c.expand(generators) for c in cert.S], variables, n=n
                ),
                Dm,
            )
            residual = left - Dm.power(2 * cert.m) - T
            reason = "S*Dm differs from Dm^(2m) + T"
        else:
            residual = T + Dm.power(2 * cert.m)
            reason = "T differs from -Dm^(2m)"
    if not residual.is_zero():
        return VerificationResult.failure(reason, residual)
    return VerificationResult.success()


def verify_any(target, cert, gens):
    """Dispatch on the certificate type (used by the command line)."""
    if isinstance(cert, SosCert):
        if not isinstance(target, MPoly):
            target = _as_scalar(target)
        if not cert.has_positive_weights():
            return VerificationResult.failure("non-positive sum-of-squares weight")
        residual = cert.expand() - target
        if residual.is_zero():
            return VerificationResult.success()
        return VerificationResult.failure("expansion differs from target", residual)
    if isinstance(cert, ScalarConeCert):
        return verify_scalar_cert(_as_scalar(target), cert, gens)
    if isinstance(cert, MatrixConeCert):
        return verify_matrix_cert(_as_matrix(target, cert.vars), cert, gens)
    if isinstance(cert, KsCert):
        if target is None:
            return verify_ks(None, cert, gens)
        return verify_ks(_as_matrix(target, cert.vars), cert, gens)
    return verify_denominator_cert(target, cert, gens)


def verify_denominator_cert(target, cert, gens):
    """Check q*f = p for a :class:`DenominatorCert`, q non-zero."""
    f = _as_scalar(target)
    q, p = cert.q.expand(), cert.p.expand()
    if q.is_zero():
        return VerificationResult.failure("zero denominator")
    if not (cert.q.has_positive_weights() and cert.p.has_positive_weights()):
        return VerificationResult.failure("non-positive sum-of-squares weight")
    residual = q * f - p
    if not residual.is_zero():
        return VerificationResult.failure("q*f differs from p", residual)
    return VerificationResult.success()


def _as_scalar(target):
    if isinstance(target, PolyMatrix):
        if target.n != 1:
            raise ValueError("a scalar certificate needs a 1x1 target")
        return target[0, 0]
    return target


def _as_matrix(target, variables):
    if isinstance(target, MPoly):
        return PolyMatrix([[target]], variables)
    return target
