from fractions import Fraction
from math import isqrt

from sympy.solvers.diophantine.diophantine import sum_of_four_squares

from ..errors import ParseError
from ..MPoly import MPoly, as_fraction


class SosCert:
    """A sum of squares sum_i w_i * q_i^2 with positive rational weights.

    A positive rational is itself a sum of four rational squares, so every
    weighted certificate converts to the plain form sum_i q_i^2 with
    :meth:`as_plain_squares`.

    Parameters
    ----------

    variables
      Variables of the polynomials.

    polys
      The polynomials q_i.

    weights
      The weights w_i (default: all 1).
    """

    def __init__(self, variables, polys=(), weights=None):
        self.vars = tuple(variables)
        self.polys = [MPoly.coerce(q, self.vars) for q in polys]
        if weights is None:
            weights = [1] * len(self.polys)
        self.weights = [as_fraction(w) for w in weights]
        if len(self.weights) != len(self.polys):
            raise ValueError("one weight per square is needed")

    @classmethod
    def unit(cls, variables):
        """The certificate 1 = 1^2."""
        return cls(variables, [MPoly.one(variables)])

    @classmethod
    def constant(cls, variables, value):
        """Certificate of a non-negative rational constant."""
        value = as_fraction(value)
        if value < 0:
            raise ValueError("a negative constant is not a sum of squares")
        if value == 0:
            return cls(variables)
        return cls(variables, [MPoly.one(variables)], [value])

    def expand(self):
        total = MPoly.zero(self.vars)
        for w, q in zip(self.weights, self.polys):
            total = total + (q * q).scale(w)
        return total

    def has_positive_weights(self):
        return all(w > 0 for w in self.weights)

    def is_empty(self):
        return all(q.is_zero() for q in self.polys)

    def scaled(self, factor):
        """Certificate of ``factor`` times this sum (factor > 0)."""
        factor = as_fraction(factor)
        if factor <= 0:
            raise ValueError("sums of squares scale by positive factors only")
        return SosCert(self.vars, self.polys, [w * factor for w in self.weights])

    def times_square(self, poly):
        """Certificate of ``poly^2`` times this sum."""
        return SosCert(self.vars, [q * poly for q in self.polys], self.weights)

    def times(self, other):
        """Certificate of the product of two sums of squares."""
        polys, weights = [], []
        for w1, q1 in zip(self.weights, self.polys):
            for w2, q2 in zip(other.weights, other.polys):
                polys.append(q1 * q2)
                weights.append(w1 * w2)
        return SosCert(self.vars, polys, weights)

    def __add__(self, other):
        return SosCert(
            self.vars, self.polys + other.polys, self.weights + other.weights
        )

    def as_plain_squares(self):
        """Equivalent list of polynomials p_j with sum p_j^2 = expand()."""
        plain = []
        for w, q in zip(self.weights, self.polys):
            if q.is_zero():
                continue
            root = _rational_sqrt(w)
            if root is not None:
                plain.append(q.scale(root))
                continue
            # w = a/b = a*b / b^2 and a*b is a sum of four integer squares
            a, b = w.numerator, w.denominator
            for s in sum_of_four_squares(a * b):
                if s:
                    plain.append(q.scale(Fraction(s, b)))
        return plain

    def to_json(self):
        return {
            "type": "sos",
            "vars": list(self.vars),
            "squares": [str(q) for q in self.polys],
            "weights": [str(w) for w in self.weights],
        }

    @classmethod
    def from_json(cls, data, variables=None):
        try:
            variables = data.get("vars", variables) if variables is None else variables
            return cls(
                variables,
                [MPoly.from_string(q, variables) for q in data["squares"]],
                data.get("weights"),
            )
        except (KeyError, TypeError) as err:
            raise ParseError("malformed sum of squares: %s" % err)

    def __repr__(self):
        return "SosCert(%s)" % " + ".join(
            "%s*(%s)^2" % (w, q) if w != 1 else "(%s)^2" % q
            for w, q in zip(self.weights, self.polys)
        )


def _rational_sqrt(value):
    if value < 0:
        return None
    p, q = isqrt(value.numerator), isqrt(value.denominator)
    if p * p == value.numerator and q * q == value.denominator:
        return Fraction(p, q)
    return None


class DenominatorCert:
    """The identity q*f = p with q, p sums of squares and q non-zero."""

    def __init__(self, q, p):
        self.q = q
        self.p = p

    def to_json(self):
        return {"type": "denominator", "q": self.q.to_json(), "p": self.p.to_json()}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(SosCert.from_json(data["q"]), SosCert.from_json(data["p"]))
        except (KeyError, TypeError) as err:
            raise ParseError("malformed denominator certificate: %s" % err)

    def __repr__(self):
        return "DenominatorCert(q=%r, p=%r)" % (self.q, self.p)
