"""Boundary Hessian conditions of a polynomial at a point of K."""

import logging
from fractions import Fraction

from ..exact_linalg import PD, classify, from_domain_matrix, rref, to_domain_matrix
from ..MPoly import MPoly, RationalPoint

logger = logging.getLogger(__name__)


class BhcRecord:
    """Outcome of :func:`bhc_check`.

    Attributes
    ----------

    point
      The RationalPoint p.

    uniformizers
      The d local parameters t_1..t_d (MPoly over the instance variables):
      the k selected ones first, then the completion by shifted
      coordinates.

    k
      Number of selected uniformizers.

    f0, linear
      Constant term and coefficients a_1..a_d of the linear Taylor part in
      the t coordinates.

    reduced_quadratic
      Symmetric rational matrix of f_2(0,..,0,t_{k+1},..,t_d).

    verdict
      True when every condition holds; ``reasons`` lists the failed ones.
    """

    def __init__(self, point, uniformizers, k, f0, linear, reduced_quadratic, reasons):
        self.point = point
        self.uniformizers = uniformizers
        self.k = k
        self.f0 = f0
        self.linear = linear
        self.reduced_quadratic = reduced_quadratic
        self.reasons = list(reasons)

    @property
    def verdict(self):
        return not self.reasons

    @property
    def coefficients(self):
        """The coefficients a_1..a_k on the selected uniformizers."""
        return self.linear[: self.k]

    def to_json(self):
        return {
            "point": self.point.to_json(),
            "uniformizers": [str(t) for t in self.uniformizers],
            "k": self.k,
            "f0": str(self.f0),
            "linear": [str(a) for a in self.linear],
            "reduced_quadratic": [
                [str(v) for v in row] for row in self.reduced_quadratic
            ],
            "verdict": self.verdict,
            "reasons": self.reasons,
        }

    def __repr__(self):
        return "BhcRecord(%s, k=%d, verdict=%s)" % (self.point, self.k, self.verdict)


def _as_uniformizer(item, gens):
    if isinstance(item, int):
        return gens.generator(item)
    return MPoly.coerce(item, gens.vars)


def _rank(rows, ncols):
    return len(rref(rows, ncols)[1]) if rows else 0


def complete_parameters(selected, point):
    """Append shifted coordinates x_j - p_j to ``selected`` until the
    Jacobian at p is invertible. Returns (parameters, jacobian)."""
    variables = point.vars
    d = len(variables)
    parameters = list(selected)
    jacobian = [[g.evaluate(point) for g in t.gradient()] for t in parameters]
    for j in range(d):
        if len(parameters) == d:
            break
        row = [Fraction(int(i == j)) for i in range(d)]
        if _rank(jacobian + [row], d) > len(jacobian):
            jacobian.append(row)
            parameters.append(
                MPoly.variable(variables, j) - MPoly.constant(variables, point.coords[j])
            )
    return parameters, jacobian


def taylor_in_parameters(f, parameters, jacobian, point):
    """Exact order-2 Taylor polynomial of f at p in the coordinates
    t_i = parameters[i] (each vanishing at p), over variables t1..td.

    With s = x - p, t = L s + Q(s) + O(3) inverts to
    s = L^-1 t - L^-1 Q(L^-1 t) + O(3).
    """
    d = len(point.vars)
    tvars = tuple("t%d" % (i + 1) for i in range(d))
    inverse = from_domain_matrix(to_domain_matrix(jacobian).inv())
    t = [MPoly.variable(tvars, i) for i in range(d)]

    def combine(matrix_row, vector):
        total = MPoly.zero(tvars)
        for c, v in zip(matrix_row, vector):
            if c:
                total = total + v.scale(c)
        return total

    linear = [combine(inverse[j], t) for j in range(d)]
    quadratic = [
        p.shift(point).homogeneous_part(2).substitute(linear, tvars, max_degree=2)
        for p in parameters
    ]
    correction = [combine(inverse[j], quadratic) for j in range(d)]
    images = [linear[j] - correction[j] for j in range(d)]
    return f.shift(point).substitute(images, tvars, max_degree=2)


def bhc_check(f, gens, point, uniformizers=(), k=None):
    """Check the boundary Hessian conditions of f at p.

    Parameters
    ----------

    f
      MPoly over the variables of ``gens``.

    gens
      GeneratorSet defining K.

    point
      RationalPoint (or coordinates) of K.

    uniformizers
      Local parameters at p, as 1-based scalar generator indices or
      polynomials.
      That they extend to a regular system of parameters is the caller's
      claim; only first-order independence is checked here.

    k
      Number of leading uniformizers the linear part may use (default: all
      of them). With k = 0 the conditions are the Hessian conditions: p is a
      strict-inequality interior zero with positive definite Hessian.
    """
    if not isinstance(point, RationalPoint):
        point = RationalPoint(gens.vars, point)
    if not gens.contains(point):
        raise ValueError("point %s is not in K" % (point,))
    selected = [_as_uniformizer(u, gens) for u in uniformizers]
    k = len(selected) if k is None else int(k)
    d = len(gens.vars)
    if not 0 <= k <= len(selected) or len(selected) > d:
        raise ValueError("k=%d with %d uniformizers in dimension %d" % (k, len(selected), d))
    for t in selected:
        if t.evaluate(point) != 0:
            raise ValueError("uniformizer %s does not vanish at %s" % (t, point))
    jacobian = [[g.evaluate(point) for g in t.gradient()] for t in selected]
    if _rank(jacobian, d) < len(selected):
        raise ValueError("uniformizers are dependent to first order at %s" % (point,))
    parameters, jacobian = complete_parameters(selected, point)
    expansion = taylor_in_parameters(f, parameters, jacobian, point)

    f0 = expansion.constant_term()
    linear = [expansion.coefficient(tuple(int(i == j) for i in range(d))) for j in range(d)]
    hessian = [[h.constant_term() for h in row] for row in expansion.hessian()]
    reduced = [[hessian[i][j] / 2 for j in range(k, d)] for i in range(k, d)]

    reasons = []
    if f0 != 0:
        reasons.append("f(p) = %s is not zero" % f0)
    for j in range(k):
        if linear[j] <= 0:
            reasons.append("a_%d = %s is not positive" % (j + 1, linear[j]))
    for j in range(k, d):
        if linear[j] != 0:
            reasons.append("linear coefficient of t_%d is %s, not 0" % (j + 1, linear[j]))
    if reduced and classify(reduced) != PD:
        reasons.append("reduced quadratic part is %s" % classify(reduced))
    if k == 0 and not gens.strictly_inside(point):
        reasons.append("p is not a strict-inequality interior point")
    logger.debug("BHC at %s with k=%d: %s", point, k, reasons or "verified")
    return BhcRecord(point, parameters, k, f0, linear, reduced, reasons)
