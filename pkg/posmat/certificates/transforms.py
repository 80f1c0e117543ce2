"""Certificate-to-certificate transformations.

Every function verifies its input (raising ``CertificateError`` when it does
not verify) and its output (raising ``InvariantBreach`` if it does not).
"""

import logging
from fractions import Fraction
from math import isqrt

from ..GeneratorSet import preorder_generators
from ..errors import CertificateError, DimensionError, InvariantBreach
from ..MPoly import MPoly, as_fraction
from ..PolyMatrix import PolyMatrix, mat_mul
from .ConeCert import (
    MATRIX_GENERATORS,
    MODULE,
    MODULE_POWER,
    PREORDER,
    PREORDER_POWER,
    GeneratorTerm,
    MatrixConeCert,
    ScalarConeCert,
    WeightedTerm,
)
from .SosCert import SosCert
from .verification import verify_matrix_cert, verify_scalar_cert

logger = logging.getLogger(__name__)

SQUARE_TO_LINEAR = "square_to_linear"
LINEAR_TO_SQUARE = "linear_to_square"


def _require(result, what):
    if not result:
        raise CertificateError("%s does not verify: %s" % (what, result.reason))


def _ensure(result, what):
    if not result:
        logger.error("%s failed its own verification: %s", what, result.reason)
        raise InvariantBreach("%s does not verify: %s" % (what, result.reason))


def embed_diagonal(diag_certs, n, gens):
    """Matrix certificate of D(d_1, ..., d_r, 0, ..., 0) from scalar
    certificates of d_1, ..., d_r: D = sum_i d_i E_ii^T E_ii.

    The cone is ``M_G^n`` when every certificate is a module certificate,
    ``T_G^n`` otherwise.
    """
    diag_certs = list(diag_certs)
    if len(diag_certs) > n:
        raise DimensionError("%d diagonal entries for n=%d" % (len(diag_certs), n))
    variables = gens.vars
    generators = list(gens.scalar_gens)
    all_module = all(c.cone == MODULE for c in diag_certs)
    cone = MODULE_POWER if all_module else PREORDER_POWER
    terms, values = [], []
    for i, cert in enumerate(diag_certs):
        value = cert.expand(generators)
        values.append(value)
        if value.is_zero():
            continue
        terms.append(WeightedTerm(value, cert, PolyMatrix.unit(i, i, n, variables)))
    result = MatrixConeCert(variables, n, cone, terms)
    target = PolyMatrix.diagonal(values, variables, n=n)
    _ensure(verify_matrix_cert(target, result, gens), "diagonal embedding")
    return result


def archimedean_lift(cert, f, n, gens):
    """Certificate of f*I_n from a scalar certificate of f."""
    return embed_diagonal([cert] * n, n, gens)


def trace_down(cert, f, gens):
    """Scalar certificate of f from a certificate of f*I_n.

    Uses f = (1/n) sum_j m_j Tr(A_j^T A_j), each trace being the sum of the
    squares of the entries of A_j.
    """
    n, variables = cert.n, cert.vars
    if cert.cone == MATRIX_GENERATORS:
        raise CertificateError("trace_down needs an M_G^n or T_G^n certificate")
    _require(
        verify_matrix_cert(PolyMatrix.identity(n, variables, scale=f), cert, gens),
        "certificate of f*I_n",
    )
    n_gens = len(gens.scalar_gens)
    preorder = cert.cone == PREORDER_POWER and any(
        t.weight_cert.cone == PREORDER for t in cert.terms
    )
    cone = PREORDER if preorder else MODULE
    factor = Fraction(1, n)
    terms = []
    for term in cert.terms:
        entries = [e for row in term.A.entries for e in row if not e.is_zero()]
        trace_sos = SosCert(variables, entries).scaled(factor) if entries else None
        if trace_sos is None:
            continue
        weight_cert = term.weight_cert
        if preorder:
            weight_cert = weight_cert.as_preorder(n_gens)
        terms.extend(weight_cert.times_sos(trace_sos).terms)
    result = ScalarConeCert(variables, cone, terms).merged()
    _ensure(verify_scalar_cert(f, result, gens), "trace-down certificate")
    return result


def _n_gens(gens):
    return len(gens.scalar_gens) if gens is not None else 0


def bounded_transform(direction, A, r, certs_in, gens):
    """Move between certificates of r^2*I - A^2 and of r*I +/- A.

    Parameters
    ----------

    direction
      ``"square_to_linear"``: ``certs_in`` is one certificate of
      r^2*I - A^2; returns ``(cert_plus, cert_minus)`` for r*I + A and
      r*I - A, using r*I +/- A = (1/2r)[(r*I +/- A)^2 + (r^2*I - A^2)].
      ``"linear_to_square"``: ``certs_in`` is the pair of certificates of
      r*I + A and r*I - A; returns the certificate of r^2*I - A^2 from
      r^2*I - A^2 = (1/2r)[P Q P + Q P Q] with P = r*I + A, Q = r*I - A.

    A
      Symmetric polynomial matrix.

    r
      Positive rational.

    gens
      The generator set the certificates refer to.
    """
    r = as_fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    if not A.is_symmetric():
        raise DimensionError("A must be symmetric")
    n, variables = A.n, A.vars
    identity = PolyMatrix.identity(n, variables)
    P = identity.scale(r) + A
    Q = identity.scale(r) - A
    square = identity.scale(r * r) - mat_mul(A, A)
    half_inverse = 1 / (2 * r)
    if direction == SQUARE_TO_LINEAR:
        cert = certs_in[0] if isinstance(certs_in, (list, tuple)) else certs_in
        _require(verify_matrix_cert(square, cert, gens), "certificate of r^2*I - A^2")
        results = []
        for linear in (P, Q):
            out = cert.square_term(linear, _n_gens(gens)).plus(cert).scaled(half_inverse)
            _ensure(verify_matrix_cert(linear, out, gens), "r*I +/- A certificate")
            results.append(out)
        return tuple(results)
    if direction == LINEAR_TO_SQUARE:
        cert_plus, cert_minus = certs_in
        _require(verify_matrix_cert(P, cert_plus, gens), "certificate of r*I + A")
        _require(verify_matrix_cert(Q, cert_minus, gens), "certificate of r*I - A")
        if cert_plus.cone != cert_minus.cone:
            raise CertificateError("both certificates must use the same cone")
        out = cert_minus.congruence(P).plus(cert_plus.congruence(Q))
        out = out.scaled(half_inverse)
        _ensure(verify_matrix_cert(square, out, gens), "r^2*I - A^2 certificate")
        return out
    raise ValueError("unknown direction %r" % direction)


def enlarge_radius(cert, r, r_new, gens):
    """Certificate of r_new - sum x_i^2 from one of r - sum x_i^2, r_new >= r.

    The difference r_new - r is added as a constant square term.
    """
    r, r_new = as_fraction(r), as_fraction(r_new)
    if r_new < r:
        raise ValueError("the new radius must not be smaller")
    result = cert.plus_constant(r_new - r, _n_gens(gens))
    target = ball_polynomial(gens.vars, r_new)
    _ensure(verify_scalar_cert(target, result, gens), "enlarged-radius certificate")
    return result


def ball_polynomial(variables, r):
    """The polynomial r - sum x_i^2."""
    total = MPoly.constant(variables, r)
    for i in range(len(variables)):
        x = MPoly.variable(variables, i)
        total = total - x * x
    return total


def linear_bounds_from_ball(cert, r, gens):
    """Certificates of rho +/- x_i for every variable, from a certificate
    of r - sum x_j^2, where rho is the least integer with rho^2 >= r.

    Uses rho +/- x_i = (1/2rho)[(rho +/- x_i)^2 + (rho^2 - r)
    + (r - sum x_j^2) + sum_{j != i} x_j^2].

    Returns ``(rho, {(i, +1): cert, (i, -1): cert, ...})``.
    """
    r = as_fraction(r)
    variables = gens.vars
    _require(
        verify_scalar_cert(ball_polynomial(variables, r), cert, gens),
        "certificate of r - sum x_i^2",
    )
    rho = isqrt(r.numerator // r.denominator)
    while rho * rho < r:
        rho += 1
    rho = max(rho, 1)
    n_gens = _n_gens(gens)
    bounds = {}
    for i in range(len(variables)):
        x_i = MPoly.variable(variables, i)
        for sign in (1, -1):
            linear = MPoly.constant(variables, rho) + x_i.scale(sign)
            squares = [linear] + [
                MPoly.variable(variables, j) for j in range(len(variables)) if j != i
            ]
            sos = SosCert(variables, squares)
            if rho * rho != r:
                sos = sos + SosCert.constant(variables, rho * rho - r)
            out = cert.plus(ScalarConeCert.sos(sos, cert.cone, n_gens), n_gens)
            out = out.scaled(Fraction(1, 2 * rho))
            _ensure(verify_scalar_cert(linear, out, gens), "linear bound certificate")
            bounds[(i, sign)] = out
    return rho, bounds


def over_preorder_generators(cert, gens):
    """Rewrite a ``M_G^n``/``T_G^n`` certificate as an ``M_gens``
    certificate over :func:`preorder_generators` of ``gens``.

    A weighted square w*q^2 of the multiplier p in a weight of the term
    weight * A^T A becomes w * (qA)^T (p*I_n) (qA). Raises CertificateError
    when a multiplier p*I_n is not one of the preorder generators.
    """
    if cert.cone == MATRIX_GENERATORS:
        raise ValueError("the certificate already uses matrix generators")
    n, variables = cert.n, cert.vars
    target = cert.expand(gens)
    _require(verify_matrix_cert(target, cert, gens), "certificate to rewrite")
    n_gens = _n_gens(gens)
    scalar_gens = list(gens.scalar_gens) if gens is not None else []
    weights = [term.weight_cert.as_preorder(n_gens) for term in cert.terms]
    cap = max([sum(sel) for w in weights for sel, _ in w.terms] + [1])
    generators = preorder_generators(gens, cap) if gens is not None else []
    one = MPoly.one(variables)
    terms = []
    for term, weight in zip(cert.terms, weights):
        for selector, sos in weight.terms:
            p = weight.multiplier(selector, scalar_gens)
            if p == one:
                index = 0
            else:
                matrix = PolyMatrix.identity(n, variables, scale=p)
                if matrix not in generators:
                    raise CertificateError("%s * I_%d is not a preorder generator" % (p, n))
                index = generators.index(matrix) + 1
            for w, q in zip(sos.weights, sos.polys):
                if w:
                    terms.append(GeneratorTerm(index, term.A.scale(q), w))
    result = MatrixConeCert(variables, n, MATRIX_GENERATORS, terms, generators)
    _ensure(
        verify_matrix_cert(target, result, gens),
        "certificate over preorder generators",
    )
    return result


def sum_of_hermitian_squares(Xplus, diag_sos, b, F):
    """Certificate of b^2*F in the cone of sums A^T A, from
    b^2*F = Xplus * D * Xplus^T and sums of squares for the diagonal entries
    of D. ``diag_sos[i]`` is an SosCert of d_i.

    Each weighted square w*q^2 of d_i gives the term w * A^T A with A the
    matrix whose row i is q times column i of Xplus.
    """
    n, variables = F.n, F.vars
    zero = MPoly.zero(variables)
    terms = []
    for i, sos in enumerate(diag_sos):
        column = Xplus.column(i)
        for w, q in zip(sos.weights, sos.polys):
            rows = [[zero] * n for _ in range(n)]
            rows[0] = [q * c for c in column]
            terms.append(GeneratorTerm(0, PolyMatrix(rows, variables), w))
    result = MatrixConeCert(variables, n, MATRIX_GENERATORS, terms, generators=[])
    target = F.scale(b * b)
    _ensure(verify_matrix_cert(target, result, None), "sum of squares for b^2*F")
    return result
