"""Bounded-degree certificate searches built on Gram problems."""

import functools
import itertools
import logging

from ..certificates import (
    KS_FORMS,
    MODULE,
    PREORDER,
    DenominatorCert,
    KsCert,
    ScalarConeCert,
    SosCert,
    verify_denominator_cert,
    verify_ks,
    verify_scalar_cert,
)
from ..certificates.KsCert import EMPTY, PSD_FORM, STRICT, ZERO
from ..Diagonalization import diagonalize
from ..errors import DimensionError, InvariantBreach
from ..MPoly import MPoly
from ..parallel import map_jobs
from ..PolyMatrix import PolyMatrix
from ..sampling import points_in_set, sample_points
from ..SearchBudget import SearchBudget
from .gram_solver import INFEASIBLE, solve_gram_problem
from .GramProblem import GramBlock, GramProblem
from .newton_polytope import half_support, monomial_basis
from .SearchResult import INFEASIBLE_AT_BUDGET, SearchResult

logger = logging.getLogger(__name__)


def _ensure(result, what):
    if not result:
        logger.error("%s failed its own verification: %s", what, result.reason)
        raise InvariantBreach("%s does not verify: %s" % (what, result.reason))


def _sos_from_terms(variables, terms):
    """SosCert from the ``(d, [[q]])`` terms of a scalar Gram block."""
    polys, weights = [], []
    for d, R in terms:
        q = R[0][0]
        if not q.is_zero():
            polys.append(q)
            weights.append(d)
    return SosCert(variables, polys, weights)


def _witness_points(variables, budget, count=None):
    return sample_points(variables, count or 40, seed=budget.seed)


# SUMS OF SQUARES


def sos_decompose(f, budget=None):
    """Search a decomposition f = sum w_i q_i^2.

    Returns a :class:`SearchResult`: ``certified`` with an SosCert whose
    expansion equals f exactly, ``infeasible_at_budget`` with a verified
    dual witness (no decomposition exists over the Newton-polytope basis,
    hence none at all), or ``inconclusive``.
    """
    budget = budget or SearchBudget()
    variables = f.vars
    if f.is_zero():
        return SearchResult.certified(SosCert(variables), budget)
    degree = f.degree()
    if degree % 2:
        return SearchResult.inconclusive(budget, reason="odd degree")
    if degree > budget.max_sos_degree:
        return SearchResult.inconclusive(budget, reason="degree above budget")
    basis = [MPoly.monomial(variables, e) for e in half_support(f)]
    if not basis:
        return SearchResult.inconclusive(budget, reason="empty Newton basis")
    problem = GramProblem(f, [GramBlock.scalar(MPoly.one(variables), basis, "sos")])
    outcome = solve_gram_problem(
        problem, budget, witness_points=_witness_points(variables, budget)
    )
    if outcome.feasible:
        cert = _sos_from_terms(variables, outcome.block_terms().get("sos", []))
        if cert.expand() != f:
            logger.error("sum of squares for %s does not expand back", f)
            raise InvariantBreach("sum of squares does not expand to its target")
        return SearchResult.certified(cert, budget)
    if outcome.status == INFEASIBLE:
        return SearchResult(INFEASIBLE_AT_BUDGET, witness=outcome.witness,
                            budget=budget)
    return SearchResult.inconclusive(budget)


def _canonical_multipliers(variables, k):
    """The sums of squares (sum x_i^2)^k and (1 + sum x_i^2)^k."""
    xs = [MPoly.variable(variables, i) for i in range(len(variables))]
    if not xs:
        return []
    result = []
    for base in (SosCert(variables, xs),
                 SosCert(variables, [MPoly.one(variables)] + xs)):
        power = SosCert.unit(variables)
        for _ in range(k):
            power = power.times(base)
        result.append(power)
    return result


def _free_denominator(f, degree_q, budget):
    """Gram search of q*f = p with q of degree degree_q, trace(Q_q) = 1."""
    variables = f.vars
    q_basis = monomial_basis(variables, degree_q // 2)
    p_basis = monomial_basis(variables, (degree_q + f.degree()) // 2)
    blocks = [
        GramBlock.scalar(f, q_basis, "q"),
        GramBlock.scalar(-MPoly.one(variables), p_basis, "p"),
    ]
    trace = {(0, s, s): 1 for s in range(len(q_basis))}
    problem = GramProblem(MPoly.zero(variables), blocks, [(trace, 1)])
    outcome = solve_gram_problem(problem, budget)
    if not outcome.feasible:
        return None
    terms = outcome.block_terms()
    return DenominatorCert(
        _sos_from_terms(variables, terms.get("q", [])),
        _sos_from_terms(variables, terms.get("p", [])),
    )


def artin_search(f, budget=None):
    """Search q*f = p with q, p sums of squares and q non-zero.

    Tries q = 1, then the multipliers (sum x_i^2)^k and (1 + sum x_i^2)^k,
    then a free multiplier of each even degree, within the degree budget.
    """
    budget = budget or SearchBudget()
    variables = f.vars
    if f.is_zero():
        cert = DenominatorCert(SosCert.unit(variables), SosCert(variables))
        return SearchResult.certified(cert, budget)
    room = budget.max_sos_degree - f.degree()
    for degree_q in range(0, room + 1, 2):
        if degree_q == 0:
            candidates = [SosCert.unit(variables)]
        else:
            candidates = _canonical_multipliers(variables, degree_q // 2)
        for q in candidates:
            result = sos_decompose(q.expand() * f, budget)
            if result:
                cert = DenominatorCert(q, result.certificate)
                _ensure(verify_denominator_cert(f, cert, None), "denominator certificate")
                logger.info("denominator of degree %d found for %s", degree_q, f)
                return SearchResult.certified(cert, budget)
    for degree_q in range(2, room + 1, 2):
        cert = _free_denominator(f, degree_q, budget)
        if cert is not None:
            _ensure(verify_denominator_cert(f, cert, None), "denominator certificate")
            return SearchResult.certified(cert, budget)
    return SearchResult.inconclusive(budget)


# CONE MEMBERSHIP


def cone_selectors(generators, cone, max_product_order):
    """``(selector, product)`` pairs of a module or preordering, zero
    products left out. Module selectors are 0 (for 1) and 1-based indices;
    preordering selectors are 0/1 tuples with at most ``max_product_order``
    ones."""
    generators = list(generators)
    m = len(generators)
    if cone == MODULE:
        result = [(0, None)]
        result += [(i + 1, g) for i, g in enumerate(generators) if not g.is_zero()]
        return result
    result = []
    for order in range(0, min(m, max_product_order) + 1):
        for chosen in itertools.combinations(range(m), order):
            product = None
            for i in chosen:
                product = generators[i] if product is None else product * generators[i]
            if product is not None and product.is_zero():
                continue
            sigma = tuple(int(i in chosen) for i in range(m))
            result.append((sigma, product))
    return result


def _cone_blocks(variables, selectors, multiplier, degree, role):
    """Blocks for sum_sigma s_sigma * (multiplier * g^sigma), each s_sigma a
    sum of squares of polynomials of degree at most (degree - deg)/2."""
    blocks = []
    for selector, product in selectors:
        weight = multiplier if product is None else multiplier * product
        if weight.is_zero():
            continue
        half = (degree - weight.degree()) // 2
        if half < 0:
            continue
        blocks.append(
            GramBlock.scalar(weight, monomial_basis(variables, half), (role, selector))
        )
    return blocks


def _cone_cert(variables, cone, terms, role):
    parts = []
    for tag, block_terms in terms.items():
        if tag[0] != role:
            continue
        sos = _sos_from_terms(variables, block_terms)
        if sos.polys:
            parts.append((tag[1], sos))
    return ScalarConeCert(variables, cone, parts).merged()


def _quick_cone_cert(f, generators, cone):
    """Certificates needing no search: f a non-negative constant or one of
    the generators."""
    variables, m = f.vars, len(generators)
    if f.is_constant() and f.constant_term() >= 0:
        return ScalarConeCert.sos(SosCert.constant(variables, f.constant_term()),
                                  cone, m)
    for i, g in enumerate(generators):
        if g == f:
            selector = i + 1 if cone == MODULE else tuple(int(k == i) for k in range(m))
            return ScalarConeCert(variables, cone, [(selector, SosCert.unit(variables))])
    return None


def cone_search(f, gens, cone=MODULE, budget=None):
    """Search a certificate of f in the quadratic module (``"module"``) or
    the preordering (``"preorder"``) of the scalar generators of ``gens``.

    The degree of the searched identity grows along the budget's ladder;
    preordering products use at most ``max_product_order`` generators.
    """
    budget = budget or SearchBudget()
    if cone not in (MODULE, PREORDER):
        raise ValueError("unknown cone %r" % cone)
    generators = list(gens.scalar_gens)
    variables = f.vars
    cert = _quick_cone_cert(f, generators, cone)
    if cert is None:
        selectors = cone_selectors(generators, cone, budget.max_product_order)
        one = MPoly.one(variables)
        points = points_in_set(gens, 30, seed=budget.seed)
        for degree in budget.degree_ladder(max(f.degree(), 0)):
            blocks = _cone_blocks(variables, selectors, one, degree, "s")
            if not blocks:
                continue
            outcome = solve_gram_problem(
                GramProblem(f, blocks), budget, witness_points=points
            )
            logger.debug("cone search for %s at degree %d: %s", f, degree,
                         outcome.status)
            if outcome.feasible:
                cert = _cone_cert(variables, cone, outcome.block_terms(), "s")
                break
    if cert is None:
        return SearchResult.inconclusive(budget)
    _ensure(verify_scalar_cert(f, cert, gens), "cone certificate")
    return SearchResult.certified(cert, budget)


# KRIVINE-STENGLE


def _ks_identity(d, target, gens, budget, with_s):
    """Search s*d - t = target (s omitted unless ``with_s``) with s, t in
    the preordering. Returns ``(s_cert, t_cert)`` or None."""
    variables = target.vars
    generators = list(gens.scalar_gens)
    n_gens = len(generators)
    zero_cert = ScalarConeCert.zero(variables, PREORDER)
    if with_s and d.is_constant() and not d.is_zero() and target.is_constant():
        value = target.constant_term() / d.constant_term()
        if value >= 0:
            s = ScalarConeCert.sos(SosCert.constant(variables, value), PREORDER, n_gens)
            return s, zero_cert
    if target.is_zero():
        return zero_cert, zero_cert
    if not with_s:
        negated = -target
        quick = _quick_cone_cert(negated, generators, PREORDER)
        if quick is not None:
            return None, quick
    selectors = cone_selectors(generators, PREORDER, budget.max_product_order)
    one = MPoly.one(variables)
    start = max(target.degree(), d.degree() if with_s else 0, 0)
    for degree in budget.degree_ladder(start):
        blocks = _cone_blocks(variables, selectors, -one if with_s else one,
                              degree, "t")
        if with_s:
            blocks += _cone_blocks(variables, selectors, d, degree, "s")
        if not blocks:
            continue
        rhs = target if with_s else -target
        outcome = solve_gram_problem(GramProblem(rhs, blocks), budget)
        if outcome.feasible:
            terms = outcome.block_terms()
            s = _cone_cert(variables, PREORDER, terms, "s") if with_s else None
            t = _cone_cert(variables, PREORDER, terms, "t")
            return s, t
    return None


def _ks_entry(item, gens, form, budget):
    """Search the certificate of one diagonal entry; returns
    ``(m_i, s_cert, t_cert)`` or None."""
    index, d = item
    variables = d.vars
    one = MPoly.one(variables)
    if form == STRICT:
        found = _ks_identity(d, one, gens, budget, with_s=True)
        return None if found is None else (0, found[0], found[1])
    if form == EMPTY:
        found = _ks_identity(one, one, gens, budget, with_s=False)
        return None if found is None else (0, None, found[1])
    if d.is_zero():
        zero = ScalarConeCert.zero(variables, PREORDER)
        return (1, zero if form == PSD_FORM else None, zero)
    top = budget.max_sos_degree // (2 * max(d.degree(), 1))
    for m in range(0, top + 1):
        power = d ** (2 * m)
        if form == PSD_FORM:
            found = _ks_identity(d, power, gens, budget, with_s=True)
        else:
            found = _ks_identity(one, power, gens, budget, with_s=False)
        if found is not None:
            logger.debug("entry %d certified with m=%d", index, m)
            return (m, found[0], found[1])
    return None


def ks_search(F, gens, form=STRICT, budget=None):
    """Search a Krivine-Stengle certificate of F over the preordering of the
    scalar generators.

    F is diagonalized, each diagonal entry d_i gets its own scalar search
    (in parallel with ``budget.jobs`` workers), exponents are equalized to
    m = max m_i by multiplying s_i and t_i by the square d_i^(2(m - m_i)),
    and the assembled certificate is verified before being returned.

    Parameters
    ----------

    F
      Symmetric PolyMatrix (ignored, may be None, for the form "empty").

    form
      ``"strict"``, ``"psd"``, ``"zero"`` or ``"empty"``.
    """
    budget = budget or SearchBudget()
    if form not in KS_FORMS:
        raise ValueError("unknown Krivine-Stengle form %r" % form)
    if F is None:
        if form != EMPTY:
            raise ValueError("the form %r needs a matrix" % form)
        n, variables = gens.n, gens.vars
        Xminus, diagonal = PolyMatrix.identity(n, variables), None
    else:
        if not F.is_symmetric():
            raise DimensionError("Krivine-Stengle certificates need a symmetric matrix")
        n, variables = F.n, F.vars
        decomposition = diagonalize(F)
        Xminus = decomposition.Xminus
        diagonal = list(decomposition.diag)
    if diagonal is None or form == EMPTY:
        diagonal = [MPoly.one(variables)] * n
    else:
        diagonal = diagonal + [MPoly.zero(variables)] * (n - len(diagonal))
    if form == EMPTY:
        found = _ks_entry((0, diagonal[0]), gens, form, budget)
        entries = [found] * n
    else:
        job = functools.partial(_ks_entry, gens=gens, form=form, budget=budget)
        entries = map_jobs(job, list(enumerate(diagonal)), budget.jobs)
    if any(entry is None for entry in entries):
        missing = [i for i, entry in enumerate(entries) if entry is None]
        return SearchResult.inconclusive(budget, failed_entries=missing)
    m = max(entry[0] for entry in entries)
    S, T = [], []
    n_gens = len(gens.scalar_gens)
    for d, (m_i, s, t) in zip(diagonal, entries):
        factor = None
        if m > m_i and form in (PSD_FORM, ZERO):
            factor = SosCert(variables, [d ** (m - m_i)])
        if s is not None:
            s = s.as_preorder(n_gens)
            S.append(s if factor is None else s.times_sos(factor))
        t = t.as_preorder(n_gens)
        T.append(t if factor is None else t.times_sos(factor))
    cert = KsCert(form, S, T, m, Xminus)
    _ensure(verify_ks(F, cert, gens), "Krivine-Stengle certificate")
    return SearchResult.certified(cert, budget)
