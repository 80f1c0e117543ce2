"""Exact solution of Gram problems through an advisory numeric stage.

The pipeline: exact affine reduction of the coefficient-matching system,
numeric maximization of the smallest Gram eigenvalue over the affine space,
then either exact recovery (rational rounding, exact projection, exact PSD
factorization, with facial reduction when the numeric solution is singular)
or an exact dual witness of infeasibility.
"""

import logging

import numpy as np

from ..exact_linalg import psd_decomposition, solve_affine
from .GramProblem import DualWitness
from .rounding import (
    AffineProjector,
    complement_basis,
    denominator_ladder,
    rational_kernel,
    rationalize,
)
from .sdp_solver import solve_sdp

logger = logging.getLogger(__name__)

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
INCONCLUSIVE = "inconclusive"


class GramOutcome:
    """Result of :func:`solve_gram_problem`.

    Attributes
    ----------

    status
      ``"feasible"``, ``"infeasible"`` or ``"inconclusive"``.

    problem
      The problem actually solved (a facial reduction of the input problem
      when the recovery needed one).

    factorizations
      When feasible: per block, the list of ``(d, v)`` with
      Q_b = sum d v v^T exactly.

    witness
      When infeasible: the verified :class:`DualWitness`.
    """

    def __init__(self, status, problem, factorizations=None, witness=None):
        self.status = status
        self.problem = problem
        self.factorizations = factorizations
        self.witness = witness

    @property
    def feasible(self):
        return self.status == FEASIBLE

    def block_terms(self):
        """Per block tag, the list of ``(d, k x n polynomial matrix)`` terms:
        the block equals sum d * R^T G R over them."""
        terms = {}
        for block, factorization in zip(self.problem.blocks, self.factorizations):
            terms.setdefault(block.tag, []).extend(
                (d, block.combination(v)) for d, v in factorization
            )
        return terms

    def __repr__(self):
        return "GramOutcome(%s, %r)" % (self.status, self.problem)


def _exact_factorizations(problem, vector):
    factorizations = []
    for matrix in problem.gram_matrices(vector):
        factorization = psd_decomposition(matrix)
        if factorization is None:
            return None
        factorizations.append(factorization)
    return factorizations


def _numeric_program(problem, particular, basis):
    """Data of: maximize lambda s.t. Q(z) - lambda*I PSD, trace Q(z) <= T."""
    q0 = np.array([float(v) for v in particular])
    K = len(basis)
    N = np.array([[float(v) for v in row] for row in basis]).reshape(K, len(q0))
    G0 = [M[0] for M in problem.numeric_matrices(q0)]
    GN = problem.numeric_matrices(N) if K else [
        np.zeros((0, block.size, block.size)) for block in problem.blocks
    ]
    trace_q0 = sum(np.trace(M) for M in G0)
    trace_N = sum(np.trace(M, axis1=1, axis2=2) for M in GN) if K else np.zeros(0)
    norm = np.sqrt(sum(np.sum(M ** 2) for M in G0))
    size = sum(block.size for block in problem.blocks)
    bound = max(1e3, 100 * (1 + norm)) * max(1.0, size / 10.0)
    C = list(G0) + [np.array([[bound - trace_q0]])]
    A = [
        np.concatenate([-M, np.eye(M.shape[1])[None]], axis=0) for M in GN
    ]
    A.append(
        np.concatenate([trace_N.reshape(K, 1, 1), np.zeros((1, 1, 1))], axis=0)
    )
    b = np.zeros(K + 1)
    b[-1] = 1.0
    return C, A, b, q0, N


def _recover(problem, projector, numeric_vector, budget):
    for denominator in denominator_ladder(budget.denominator_bound):
        candidate = projector.project(rationalize(numeric_vector, denominator))
        factorizations = _exact_factorizations(problem, candidate)
        if factorizations is not None:
            logger.debug("exact recovery with denominators <= %d", denominator)
            return factorizations
    return None


def _facial_reduction(problem, grams, threshold):
    """Restrict every block to the complement of the (rounded) numeric
    kernel of its Gram matrix; None when nothing is singular."""
    bases, reduced = [], False
    for block, M in zip(problem.blocks, grams):
        values, vectors = np.linalg.eigh(M)
        scale = max(1.0, float(values[-1]))
        kernel = vectors[:, values < threshold * scale]
        if kernel.shape[1] == 0:
            bases.append(None)
            continue
        reduced = True
        if kernel.shape[1] == block.size:
            bases.append([])
            continue
        rows = rational_kernel(kernel.T)
        bases.append(complement_basis(rows, block.size))
    if not reduced:
        return None
    logger.debug(
        "facial reduction: block sizes %s -> %s",
        [block.size for block in problem.blocks],
        [block.size if W is None else len(W) for block, W in zip(problem.blocks, bases)],
    )
    return problem.restricted(bases)


def _dual_witness(problem, X_blocks, witness_points, budget):
    """Round a moment functional read off the primal solution, mixed with a
    positive point-evaluation functional, and check it exactly."""
    labels = problem.labels
    n_rows = len(labels)
    columns = problem.columns
    Phi = np.zeros((len(columns), n_rows))
    x = np.zeros(len(columns))
    root_half = np.sqrt(0.5)
    for col, (b, s, t) in enumerate(columns):
        weight = 1.0 if s == t else root_half
        for r, c in problem.column_entries(col).items():
            Phi[col, r] = float(c) * weight
        x[col] = X_blocks[b][s, t] * (1.0 if s == t else np.sqrt(2.0))
    L = np.linalg.lstsq(Phi, x, rcond=None)[0]
    mixes = [np.zeros(n_rows)]
    if witness_points and problem.n == 1:
        L0 = np.array([float(v) for v in problem.point_functional(witness_points)])
        L0 *= (np.max(np.abs(L)) + 1e-12) / (np.max(np.abs(L0)) + 1e-300)
        mixes += [eps * L0 for eps in (1e-6, 1e-4, 1e-2, 1e-1)]
    for mix in mixes:
        for denominator in denominator_ladder(budget.denominator_bound):
            witness = DualWitness(problem, rationalize(L + mix, denominator))
            if witness.verify():
                logger.debug("dual witness with denominators <= %d", denominator)
                return witness
    return None


def solve_gram_problem(problem, budget, witness_points=(), facial_rounds=3):
    """Decide a Gram problem exactly, or give up.

    Parameters
    ----------

    problem
      The :class:`GramProblem`.

    budget
      SearchBudget (iterations, denominator bound, tolerance escalations).

    witness_points
      Rational points where every block multiplier is non-negative, used to
      make numeric dual functionals strictly feasible before rounding.

    facial_rounds
      How many facial reductions may be chained.
    """
    logger.debug("solving %r", problem)
    particular, basis = solve_affine(
        problem.dense_rows(), problem.rhs, len(problem.columns)
    )
    if particular is None:
        witness = DualWitness(problem, [-y for y in basis])
        if witness.verify():
            logger.debug("coefficient system inconsistent")
            return GramOutcome(INFEASIBLE, problem, witness=witness)
        return GramOutcome(INCONCLUSIVE, problem)
    if not problem.columns:
        return GramOutcome(FEASIBLE, problem, factorizations=[])
    if not basis:
        factorizations = _exact_factorizations(problem, particular)
        if factorizations is not None:
            return GramOutcome(FEASIBLE, problem, factorizations=factorizations)

    C, A, b, q0, N = _numeric_program(problem, particular, basis)
    projector = AffineProjector(particular, basis)
    tolerance = 1e-8
    iterations = budget.max_iterations
    reduction_tried = False
    for attempt in range(budget.tolerance_escalations + 1):
        result = solve_sdp(C, A, b, tolerance=tolerance, max_iterations=iterations)
        logger.debug("attempt %d: %r", attempt, result)
        if not np.all(np.isfinite(result.y)):
            break
        smallest = float(result.y[-1])
        numeric_vector = q0 + result.y[:-1] @ N if len(basis) else q0
        grams = [M[0] for M in problem.numeric_matrices(numeric_vector)]
        margin = max(np.sqrt(tolerance), 1e-6)
        if smallest > -margin:
            factorizations = _recover(problem, projector, numeric_vector, budget)
            if factorizations is not None:
                return GramOutcome(FEASIBLE, problem, factorizations=factorizations)
            if facial_rounds > 0 and not reduction_tried:
                reduction_tried = True
                reduced = _facial_reduction(problem, grams, margin)
                if reduced is not None:
                    outcome = solve_gram_problem(
                        reduced, budget, witness_points, facial_rounds - 1
                    )
                    if outcome.status == FEASIBLE:
                        return outcome
        else:
            witness = _dual_witness(problem, result.X[:-1], witness_points, budget)
            if witness is not None:
                return GramOutcome(INFEASIBLE, problem, witness=witness)
        tolerance /= 100
        iterations += budget.max_iterations // 2
        logger.info("exact recovery failed, tolerance tightened to %.0e", tolerance)
    return GramOutcome(INCONCLUSIVE, problem)
