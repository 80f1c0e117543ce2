""" posmat.sos: bounded-degree certificate searches """

from .SearchResult import (
    SearchResult,
    CERTIFIED,
    INFEASIBLE_AT_BUDGET,
    INCONCLUSIVE,
    COUNTEREXAMPLE,
)
from .GramProblem import GramBlock, GramProblem, DualWitness
from .gram_solver import GramOutcome, solve_gram_problem
from .newton_polytope import half_support, monomial_basis
from .searches import (
    sos_decompose,
    artin_search,
    cone_search,
    cone_selectors,
    ks_search,
)
from .archimedean import (
    ArchimedeanWitness,
    BoundedWitness,
    archimedean_check,
    bounded_element_check,
    matrix_module_search,
    SCALAR_MODULE,
    SCALAR_PREORDER,
    MATRIX_MODULE,
    ARCHIMEDEAN_MODES,
)

__all__ = [
    "SearchResult",
    "CERTIFIED",
    "INFEASIBLE_AT_BUDGET",
    "INCONCLUSIVE",
    "COUNTEREXAMPLE",
    "GramBlock",
    "GramProblem",
    "DualWitness",
    "GramOutcome",
    "solve_gram_problem",
    "half_support",
    "monomial_basis",
    "sos_decompose",
    "artin_search",
    "cone_search",
    "cone_selectors",
    "ks_search",
    "ArchimedeanWitness",
    "BoundedWitness",
    "archimedean_check",
    "bounded_element_check",
    "matrix_module_search",
    "SCALAR_MODULE",
    "SCALAR_PREORDER",
    "MATRIX_MODULE",
    "ARCHIMEDEAN_MODES",
]
