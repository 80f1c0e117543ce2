"""Exact analysis of candidate zeros, and an advisory numeric pre-scan."""

import logging
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize

from ..Diagonalization import diagonalize
from ..errors import DimensionError
from ..exact_linalg import classify
from ..MPoly import MPoly, RationalPoint
from ..sampling import sample_points

logger = logging.getLogger(__name__)


def hessian_at(f, point):
    """Exact Hessian matrix D^2 f(p)."""
    return [[h.evaluate(point) for h in row] for row in f.hessian()]


class ZeroRecord:
    """Exact facts about a polynomial f at a candidate point p.

    Attributes
    ----------

    point
      The RationalPoint p.

    is_zero
      Whether f(p) = 0.

    in_K
      Whether every scalar generator is non-negative at p.

    interior
      Whether every scalar generator is positive at p (strict-inequality
      interior, a sufficient condition for p to be interior to K).

    hessian
      D^2 f(p) as a list of lists of Fraction.

    hessian_class
      ``"PD"``, ``"PSD"``, ``"indefinite"`` or ``"negative"``.
    """

    def __init__(self, point, is_zero, in_K, interior, hessian, hessian_class):
        self.point = point
        self.is_zero = is_zero
        self.in_K = in_K
        self.interior = interior
        self.hessian = hessian
        self.hessian_class = hessian_class

    @property
    def hessian_condition(self):
        """Interior zero with a positive definite Hessian."""
        return self.is_zero and self.interior and self.hessian_class == "PD"

    def to_json(self):
        return {
            "point": self.point.to_json(),
            "is_zero": self.is_zero,
            "in_K": self.in_K,
            "interior": self.interior,
            "hessian": [[str(v) for v in row] for row in self.hessian],
            "hessian_class": self.hessian_class,
        }

    def __repr__(self):
        return "ZeroRecord(%s, zero=%s, interior=%s, hessian=%s)" % (
            self.point,
            self.is_zero,
            self.interior,
            self.hessian_class,
        )


def zero_analysis(f, gens, candidates):
    """One :class:`ZeroRecord` per candidate point, every field exact.

    Candidates where f does not vanish are kept (with ``is_zero`` False).
    """
    records = []
    for point in candidates:
        if not isinstance(point, RationalPoint):
            point = RationalPoint(f.vars, point)
        hessian = hessian_at(f, point)
        records.append(
            ZeroRecord(
                point,
                is_zero=f.evaluate(point) == 0,
                in_K=gens.contains(point),
                interior=gens.strictly_inside(point),
                hessian=hessian,
                hessian_class=classify(hessian) if hessian else "PD",
            )
        )
    return records


def quadratic_form(F, direction):
    """The polynomial x^T F x for a vector x of polynomials or rationals."""
    variables = F.vars
    x = [MPoly.coerce(v, variables) for v in direction]
    if len(x) != F.n:
        raise DimensionError("direction of length %d for n=%d" % (len(x), F.n))
    total = MPoly.zero(variables)
    for i in range(F.n):
        if x[i].is_zero():
            continue
        for j in range(F.n):
            if not x[j].is_zero() and not F[i, j].is_zero():
                total = total + x[i] * F[i, j] * x[j]
    return total


def diagonal_directions(F):
    """The vectors v_i = Xminus^T e_i (rows of Xminus), with
    v_i^T F v_i = d_i the diagonal entries of the diagonalization."""
    Xminus = diagonalize(F).Xminus
    return [Xminus.row(i) for i in range(F.n)]


class DirectionAnalysis:
    """Zero analysis of x^T F x for one direction x."""

    def __init__(self, direction, polynomial, records):
        self.direction = direction
        self.polynomial = polynomial
        self.records = records

    @property
    def degenerate(self):
        """x^T F x vanishes identically (infinitely many zeros)."""
        return self.polynomial.is_zero()

    def zeros_in_K(self):
        return [r for r in self.records if r.is_zero and r.in_K]

    def to_json(self):
        return {
            "direction": [str(v) for v in self.direction],
            "polynomial": str(self.polynomial),
            "degenerate": self.degenerate,
            "records": [r.to_json() for r in self.records],
        }


def matrix_zero_analysis(F, gens, directions=None, candidates=()):
    """Run :func:`zero_analysis` on x^T F x for every direction.

    Parameters
    ----------

    directions
      Vectors of rationals or polynomials. The default is the
      diagonalization directions of F; extra vectors can be appended by
      passing them along with ``diagonal_directions(F)``.

    candidates
      Candidate points shared by all directions.
    """
    if directions is None:
        directions = diagonal_directions(F)
    result = []
    for direction in directions:
        vector = [MPoly.coerce(v, F.vars) for v in direction]
        if all(v.is_zero() for v in vector):
            raise ValueError("direction vectors must be non-zero")
        polynomial = quadratic_form(F, vector)
        result.append(
            DirectionAnalysis(vector, polynomial, zero_analysis(polynomial, gens, candidates))
        )
    return result


# ADVISORY NUMERIC PRE-SCAN


def _objective(f, gens):
    def value(x):
        point = np.atleast_2d(x)
        total = f.evaluate_float(point)[0] ** 2
        for g in gens.scalar_gens:
            total += min(g.evaluate_float(point)[0], 0.0) ** 2
        return total

    return value


def prescan_zeros(f, gens, starts=30, seed=0, denominator=1000, tolerance=1e-9):
    """Candidate zeros of f in K from local descents of
    f^2 + sum min(g_i, 0)^2, rounded to rationals.

    The output is advisory: every candidate still has to go through
    :func:`zero_analysis`.
    """
    if f.is_zero() or f.is_constant():
        return []
    objective = _objective(f, gens)
    found = []
    for start in sample_points(f.vars, starts, seed=seed):
        x0 = np.array([float(c) for c in start.coords])
        result = minimize(objective, x0, method="BFGS")
        if result.fun > tolerance:
            continue
        roundings = [
            RationalPoint(f.vars, [Fraction(float(v)).limit_denominator(q) for v in result.x])
            for q in (12, denominator)
        ]
        point = next((p for p in roundings if f.evaluate(p) == 0), roundings[-1])
        if point not in found:
            found.append(point)
    logger.debug("pre-scan proposed %d candidate zeros for %s", len(found), f)
    return found
