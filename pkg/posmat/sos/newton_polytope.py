"""Monomial bases for Gram matrices, pruned with the Newton polytope."""

import logging

import numpy as np
from scipy.optimize import linprog

from ..MPoly import MPoly

logger = logging.getLogger(__name__)


def in_convex_hull(point, vertices):
    """Whether ``point`` is a convex combination of ``vertices`` (LP test)."""
    vertices = np.asarray(vertices, dtype=float)
    m = vertices.shape[0]
    A_eq = np.vstack([vertices.T, np.ones((1, m))])
    b_eq = np.append(np.asarray(point, dtype=float), 1.0)
    result = linprog(
        np.zeros(m), A_eq=A_eq, b_eq=b_eq, bounds=(0, None), method="highs"
    )
    # anything but a proven infeasibility keeps the monomial
    return result.status != 2


def half_support(f):
    """Exponents e with 2e in the Newton polytope of f, ascending grlex.

    Every sum-of-squares decomposition of f only uses such monomials, so
    restricting the Gram basis to them never changes feasibility.
    """
    support = list(f.terms)
    degree = f.degree()
    if degree < 0:
        return []
    low = min(sum(e) for e in support)
    candidates = MPoly.monomials(len(f.vars), degree // 2, (low + 1) // 2)
    exponents_min = np.min(np.array(support), axis=0)
    exponents_max = np.max(np.array(support), axis=0)
    kept = []
    for e in candidates:
        doubled = 2 * np.array(e)
        if np.any(doubled < exponents_min) or np.any(doubled > exponents_max):
            continue
        if in_convex_hull(doubled, support):
            kept.append(e)
    logger.debug("Newton polytope kept %d of %d monomials", len(kept),
                  len(candidates))
    return kept


def monomial_basis(variables, max_degree, min_degree=0):
    """The monomials of degree between the bounds, as MPoly."""
    if max_degree < min_degree:
        return []
    return [
        MPoly.monomial(variables, e)
        for e in MPoly.monomials(len(variables), max_degree, min_degree)
    ]
