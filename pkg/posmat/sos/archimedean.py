"""Archimedean property and bounded elements of quadratic modules."""

import logging

from ..certificates import (
    MATRIX_GENERATORS,
    MODULE,
    PREORDER,
    SQUARE_TO_LINEAR,
    GeneratorTerm,
    MatrixConeCert,
    archimedean_lift,
    ball_polynomial,
    enlarge_radius,
    bounded_transform,
    linear_bounds_from_ball,
    verify_matrix_cert,
    verify_scalar_cert,
)
from ..errors import InvariantBreach
from ..MPoly import MPoly, as_fraction
from ..PolyMatrix import PolyMatrix, mat_mul
from ..sampling import points_in_set
from ..SearchBudget import SearchBudget
from .gram_solver import solve_gram_problem
from .GramProblem import GramBlock, GramProblem
from .newton_polytope import monomial_basis
from .searches import cone_search
from .SearchResult import SearchResult

logger = logging.getLogger(__name__)

SCALAR_MODULE = "scalar_module"
SCALAR_PREORDER = "scalar_preorder"
MATRIX_MODULE = "matrix_module"
ARCHIMEDEAN_MODES = (SCALAR_MODULE, SCALAR_PREORDER, MATRIX_MODULE)


class ArchimedeanWitness:
    """Certificate that r - sum x_i^2 lies in the module (or preordering)
    of a generator set; in matrix mode also of (r - sum x_i^2) * I_n.

    Parameters
    ----------

    r
      The radius bound (a positive rational).

    mode
      ``"scalar_module"``, ``"scalar_preorder"`` or ``"matrix_module"``.

    generator_set
      The GeneratorSet the certificates refer to.

    scalar_cert
      ScalarConeCert of r - sum x_i^2.

    matrix_cert
      MatrixConeCert of (r - sum x_i^2) * I_n (matrix mode only).
    """

    def __init__(self, r, mode, generator_set, scalar_cert, matrix_cert=None):
        self.r = as_fraction(r)
        self.mode = mode
        self.generator_set = generator_set
        self.scalar_cert = scalar_cert
        self.matrix_cert = matrix_cert

    @property
    def target(self):
        return ball_polynomial(self.generator_set.vars, self.r)

    def verify(self):
        gens = self.generator_set
        if not verify_scalar_cert(self.target, self.scalar_cert, gens):
            return False
        if self.matrix_cert is not None:
            F = PolyMatrix.identity(gens.n, gens.vars, scale=self.target)
            return bool(verify_matrix_cert(F, self.matrix_cert, gens))
        return True

    def at(self, r_new):
        """The witness for a larger radius, built without searching."""
        gens = self.generator_set
        scalar = enlarge_radius(self.scalar_cert, self.r, r_new, gens)
        matrix = None
        if self.matrix_cert is not None:
            target = ball_polynomial(gens.vars, r_new)
            matrix = archimedean_lift(scalar, target, gens.n, gens)
        return ArchimedeanWitness(r_new, self.mode, gens, scalar, matrix)

    def linear_bounds(self):
        """``(rho, {(i, +1 or -1): certificate of rho +/- x_i})``."""
        return linear_bounds_from_ball(self.scalar_cert, self.r, self.generator_set)

    def to_json(self):
        data = {
            "r": str(self.r),
            "mode": self.mode,
            "target": str(self.target),
            "scalar_certificate": self.scalar_cert.to_json(),
        }
        if self.matrix_cert is not None:
            data["matrix_certificate"] = self.matrix_cert.to_json()
        return data

    def __repr__(self):
        return "ArchimedeanWitness(r=%s, mode=%s)" % (self.r, self.mode)


def archimedean_check(gens, mode=SCALAR_MODULE, budget=None):
    """Search the smallest r of the budget's ladder with r - sum x_i^2 in
    the cone, and lift it to (r - sum x_i^2) * I_n in matrix mode.

    Returns a SearchResult whose certificate is an
    :class:`ArchimedeanWitness`.
    """
    budget = budget or SearchBudget()
    if mode not in ARCHIMEDEAN_MODES:
        raise ValueError("unknown Archimedean mode %r" % mode)
    cone = PREORDER if mode == SCALAR_PREORDER else MODULE
    for r in budget.r_ladder:
        target = ball_polynomial(gens.vars, r)
        result = cone_search(target, gens, cone, budget)
        if not result:
            continue
        matrix = None
        if mode == MATRIX_MODULE:
            matrix = archimedean_lift(result.certificate, target, gens.n, gens)
        witness = ArchimedeanWitness(r, mode, gens, result.certificate, matrix)
        if not witness.verify():
            raise InvariantBreach("Archimedean witness does not verify")
        logger.info("Archimedean witness at r=%s (%s)", r, mode)
        return SearchResult.certified(witness, budget)
    return SearchResult.inconclusive(budget)


# MATRIX QUADRATIC MODULE OF THE MATRIX GENERATORS


def _quick_matrix_cert(F, gens):
    n, variables = F.n, F.vars
    if F.is_zero():
        return MatrixConeCert(variables, n, MATRIX_GENERATORS, [])
    identity = PolyMatrix.identity(n, variables)
    if F.is_scalar_multiple_of_identity():
        c = F[0, 0]
        if c.is_constant() and c.constant_term() > 0:
            term = GeneratorTerm(0, identity, c.constant_term())
            return MatrixConeCert(variables, n, MATRIX_GENERATORS, [term])
    for k, G in enumerate(gens.matrix_gens):
        if G == F:
            return MatrixConeCert(
                variables, n, MATRIX_GENERATORS, [GeneratorTerm(k + 1, identity)]
            )
    return None


def matrix_module_search(F, gens, budget=None):
    """Search F = sum_j A_j^T A_j + sum_k sum_j B_kj^T G_k B_kj over the
    matrix generators G_k of ``gens`` (the matrix quadratic module they
    generate), degree by degree."""
    budget = budget or SearchBudget()
    n, variables = F.n, F.vars
    if gens.n != n:
        gens = gens.with_n(n)
    cert = _quick_matrix_cert(F, gens)
    if cert is None:
        one = MPoly.one(variables)
        points = points_in_set(gens, 20, seed=budget.seed)
        for degree in budget.degree_ladder(max(F.degree(), 0)):
            blocks = [GramBlock.weighted(one, monomial_basis(variables, degree // 2),
                                         n, ("gen", 0))]
            for k, G in enumerate(gens.matrix_gens):
                half = (degree - G.degree()) // 2
                if half >= 0 and not G.is_zero():
                    blocks.append(GramBlock.generator(
                        G, monomial_basis(variables, half), ("gen", k + 1)))
            outcome = solve_gram_problem(
                GramProblem(F, blocks), budget,
                witness_points=points if n == 1 else (),
            )
            if outcome.feasible:
                terms = []
                for (_, k), block_terms in outcome.block_terms().items():
                    for d, R in block_terms:
                        if k == 0:
                            A = PolyMatrix.from_rows([R[0]], variables)
                        else:
                            A = PolyMatrix([list(row) for row in R], variables)
                        if not A.is_zero():
                            terms.append(GeneratorTerm(k, A, d))
                cert = MatrixConeCert(variables, n, MATRIX_GENERATORS, terms)
                break
    if cert is None:
        return SearchResult.inconclusive(budget)
    result = verify_matrix_cert(F, cert, gens)
    if not result:
        logger.error("matrix module certificate fails: %s", result.reason)
        raise InvariantBreach("matrix module certificate does not verify")
    return SearchResult.certified(cert, budget)


class BoundedWitness:
    """Certificate that r^2 * I_n - A^T A lies in the matrix quadratic
    module, plus (for symmetric A) the derived certificates of r*I_n +/- A."""

    def __init__(self, A, r, cert, linear_certs=None):
        self.A = A
        self.r = as_fraction(r)
        self.cert = cert
        self.linear_certs = linear_certs

    def to_json(self):
        data = {
            "r": str(self.r),
            "A": self.A.to_json(),
            "certificate": self.cert.to_json(),
        }
        if self.linear_certs is not None:
            data["plus_certificate"] = self.linear_certs[0].to_json()
            data["minus_certificate"] = self.linear_certs[1].to_json()
        return data

    def __repr__(self):
        return "BoundedWitness(r=%s)" % self.r


def bounded_element_check(A, gens, budget=None):
    """Search r on the budget's ladder with r^2 * I_n - A^T A in the
    matrix quadratic module generated by ``gens``."""
    budget = budget or SearchBudget()
    n, variables = A.n, A.vars
    gram = mat_mul(A.transpose(), A)
    if gens.n != n:
        gens = gens.with_n(n)
    for r in budget.r_ladder:
        target = PolyMatrix.identity(n, variables, scale=as_fraction(r) ** 2) - gram
        result = matrix_module_search(target, gens, budget)
        if not result:
            continue
        linear = None
        if A.is_symmetric():
            linear = bounded_transform(SQUARE_TO_LINEAR, A, r, result.certificate, gens)
        logger.info("bounded element with r=%s", r)
        return SearchResult.certified(
            BoundedWitness(A, r, result.certificate, linear), budget
        )
    return SearchResult.inconclusive(budget)
