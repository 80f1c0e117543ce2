"""Sparse multivariate polynomials with exact rational coefficients."""

import itertools
from tokenize import TokenError
from fractions import Fraction
from math import gcd

import numpy as np
import sympy
from sympy.parsing.sympy_parser import (
    parse_expr,
    standard_transformations,
    convert_xor,
    rationalize,
)

from .errors import ParseError, VariableContextError

_PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)


def as_fraction(value):
    """Convert an int, Fraction, string "3/2" or sympy rational to Fraction.

    Floats are refused: every number entering posmat must be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ParseError("not an exact rational: %r" % value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        if not isinstance(value, float):
            return Fraction(int(value.numerator), int(value.denominator))
    raise ParseError("not an exact rational: %r" % (value,))


def rational_content(values):
    """Largest positive rational c such that every value/c is an integer
    and these integers are coprime (1 if all values are zero)."""
    numerators = 0
    denominators = 1
    for value in values:
        value = as_fraction(value)
        if value:
            numerators = gcd(numerators, value.numerator)
            denominators = denominators * value.denominator // gcd(
                denominators, value.denominator
            )
    if numerators == 0:
        return Fraction(1)
    return Fraction(numerators, denominators)


def grlex_key(exponents):
    """Sorting key of the graded lexicographic order."""
    return (sum(exponents), exponents)


class MPoly:
    """Polynomial with rational coefficients over an ordered variable list.

    Parameters
    ----------

    variables
      Ordered list of variable names, e.g. ``("x", "y")``.

    terms
      Dictionary ``{exponent_tuple: coefficient}``. Coefficients can be
      anything :func:`as_fraction` accepts; zero coefficients are dropped.

    Instances are immutable. Arithmetic accepts other polynomials over the
    same variables, and exact scalars (int, Fraction).
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        nvars = len(self.vars)
        clean = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != nvars:
                raise VariableContextError(
                    "exponent %s does not match variables %s"
                    % (exponents, self.vars)
                )
            if any(e < 0 for e in exponents):
                raise ValueError("negative exponent in %s" % (exponents,))
            coefficient = as_fraction(coefficient)
            if coefficient != 0:
                clean[exponents] = coefficient
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        """Build without validation; ``terms`` must already be canonical."""
        poly = cls.__new__(cls)
        poly.vars = variables
        poly.terms = terms
        poly._hash = None
        return poly

    # CONSTRUCTORS

    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        value = as_fraction(value)
        if value == 0:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): value})

    @classmethod
    def one(cls, variables):
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables, name_or_index):
        """Return the polynomial ``x_i`` (by name or by position)."""
        variables = tuple(variables)
        if isinstance(name_or_index, str):
            if name_or_index not in variables:
                raise VariableContextError(
                    "unknown variable %r in %s" % (name_or_index, variables)
                )
            index = variables.index(name_or_index)
        else:
            index = int(name_or_index)
        exponents = tuple(int(i == index) for i in range(len(variables)))
        return cls._raw(variables, {exponents: Fraction(1)})

    @classmethod
    def monomial(cls, variables, exponents, coefficient=1):
        return cls(variables, {tuple(exponents): coefficient})

    @classmethod
    def from_string(cls, text, variables):
        """Parse ``3/2*x1^2*x2 - x3 + 1`` over the given variables.

        Both ``^`` and ``**`` denote powers. Decimal literals are read as
        exact rationals. Any name outside ``variables`` is an error.
        """
        variables = tuple(variables)
        if not isinstance(text, str):
            return cls.constant(variables, text)
        symbols = [sympy.Symbol(v) for v in variables]
        local_dict = dict(zip(variables, symbols))
        try:
            expr = parse_expr(
                text,
                local_dict=local_dict,
                transformations=_PARSE_TRANSFORMATIONS,
                evaluate=True,
            )
        except (SyntaxError, TypeError, sympy.SympifyError, TokenError) as err:
            raise ParseError("cannot parse polynomial %r: %s" % (text, err))
        unknown = expr.free_symbols - set(symbols)
        if unknown:
            raise VariableContextError(
                "polynomial %r uses undeclared variables %s"
                % (text, sorted(str(s) for s in unknown))
            )
        if not symbols:
            if not expr.is_Rational:
                raise ParseError("not a rational constant: %r" % text)
            return cls.constant(variables, expr)
        try:
            poly = sympy.Poly(expr, *symbols, domain="QQ")
        except sympy.PolynomialError as err:
            raise ParseError("not a polynomial: %r (%s)" % (text, err))
        return cls(variables, dict(poly.terms()))

    @classmethod
    def coerce(cls, value, variables):
        """Return ``value`` as an MPoly over ``variables``."""
        if isinstance(value, MPoly):
            if value.vars != tuple(variables):
                raise VariableContextError(
                    "variables %s differ from %s" % (value.vars, variables)
                )
            return value
        if isinstance(value, str):
            return cls.from_string(value, variables)
        return cls.constant(variables, value)

    # BASIC PROPERTIES

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), Fraction(0))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def sorted_terms(self, descending=True):
        """Terms as ``(exponents, coefficient)`` pairs in grlex order."""
        return sorted(
            self.terms.items(),
            key=lambda item: grlex_key(item[0]),
            reverse=descending,
        )

    def leading_term(self):
        return self.sorted_terms()[0]

    def content(self):
        """Positive rational c such that self/c has coprime integer
        coefficients (1 for the zero polynomial)."""
        return rational_content(self.terms.values())

    def primitive(self):
        return self.scale(1 / self.content())

    # ARITHMETIC

    def _check_context(self, other):
        if self.vars != other.vars:
            raise VariableContextError(
                "cannot combine polynomials over %s and %s"
                % (self.vars, other.vars)
            )

    def _other(self, other):
        if isinstance(other, MPoly):
            self._check_context(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MPoly.constant(self.vars, other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponents, c in other.terms.items():
            value = terms.get(exponents, 0) + c
            if value:
                terms[exponents] = value
            else:
                terms.pop(exponents, None)
        return MPoly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor):
        """Multiply by an exact scalar."""
        factor = as_fraction(factor)
        if factor == 0:
            return MPoly.zero(self.vars)
        return MPoly._raw(
            self.vars, {e: c * factor for e, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_context(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                terms[exponents] = terms.get(exponents, 0) + c1 * c2
        return MPoly._raw(self.vars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(Fraction(1) / other)
        if isinstance(other, MPoly):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = MPoly.one(self.vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def exact_div(self, divisor):
        """Return q with q * divisor == self, or raise ValueError."""
        divisor = self._other(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if divisor.is_constant():
            return self.scale(1 / divisor.constant_term())
        lead_e, lead_c = divisor.leading_term()
        quotient = {}
        remainder = self
        while not remainder.is_zero():
            rem_e, rem_c = remainder.leading_term()
            shift = tuple(a - b for a, b in zip(rem_e, lead_e))
            if any(s < 0 for s in shift):
                raise ValueError("%s is not divisible by %s" % (self, divisor))
            factor = rem_c / lead_c
            quotient[shift] = factor
            remainder = remainder - divisor * MPoly._raw(
                self.vars, {shift: factor}
            )
        return MPoly._raw(self.vars, quotient)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): Fraction(other)}
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # CALCULUS AND COMPOSITION

    def diff(self, variable):
        """Partial derivative along a variable (name or index)."""
        index = (
            self.vars.index(variable) if isinstance(variable, str) else variable
        )
        terms = {}
        for e, c in self.terms.items():
            if e[index]:
                new_e = e[:index] + (e[index] - 1,) + e[index + 1:]
                terms[new_e] = c * e[index]
        return MPoly._raw(self.vars, terms)

    def gradient(self):
        return [self.diff(i) for i in range(len(self.vars))]

    def hessian(self):
        """Matrix (list of lists) of second partial derivatives."""
        gradient = self.gradient()
        return [[g.diff(j) for j in range(len(self.vars))] for g in gradient]

    def homogeneous_part(self, degree):
        return MPoly._raw(
            self.vars,
            {e: c for e, c in self.terms.items() if sum(e) == degree},
        )

    def truncate(self, degree):
        """Drop every term of total degree above ``degree``."""
        return MPoly._raw(
            self.vars,
            {e: c for e, c in self.terms.items() if sum(e) <= degree},
        )

    def substitute(self, images, variables=None, max_degree=None):
        """Compose: replace the i-th variable by ``images[i]``.

        ``images`` are polynomials over ``variables`` (default: the images'
        own context). With ``max_degree`` every intermediate product is
        truncated, which gives the exact low-order part of the composition
        when the images have no constant term.
        """
        if len(images) != len(self.vars):
            raise VariableContextError(
                "need %d images, got %d" % (len(self.vars), len(images))
            )
        if variables is None:
            variables = next(
                (p.vars for p in images if isinstance(p, MPoly)), ()
            )
        images = [MPoly.coerce(p, variables) for p in images]

        def cut(p):
            return p if max_degree is None else p.truncate(max_degree)

        powers = [{0: MPoly.one(variables)} for _ in images]

        def power(i, k):
            if k not in powers[i]:
                powers[i][k] = cut(power(i, k - 1) * images[i])
            return powers[i][k]

        result = MPoly.zero(variables)
        for e, c in self.terms.items():
            term = MPoly.constant(variables, c)
            for i, k in enumerate(e):
                if k:
                    term = cut(term * power(i, k))
            result = result + term
        return result

    def shift(self, point):
        """Return ``f(x + p)`` (Taylor re-centering at ``p``)."""
        coords = getattr(point, "coords", point)
        images = [
            MPoly.variable(self.vars, i) + as_fraction(p)
            for i, p in enumerate(coords)
        ]
        return self.substitute(images, self.vars)

    # EVALUATION

    def evaluate(self, point):
        """Exact value at a rational point (sequence or RationalPoint)."""
        coords = getattr(point, "coords", point)
        if len(coords) != len(self.vars):
            raise VariableContextError(
                "point of length %d for variables %s" % (len(coords), self.vars)
            )
        coords = [as_fraction(c) for c in coords]
        total = Fraction(0)
        for e, c in self.terms.items():
            value = c
            for x, k in zip(coords, e):
                if k:
                    value *= x ** k
            total += value
        return total

    __call__ = evaluate

    def evaluate_float(self, points):
        """Vectorised floating evaluation on an (m, d) array of points.

        Only for advisory numeric stages (sampling, pre-scans).
        """
        points = np.atleast_2d(np.asarray(points, dtype=float))
        values = np.zeros(points.shape[0])
        for e, c in self.terms.items():
            values += float(c) * np.prod(points ** np.array(e), axis=1)
        return values

    # ENUMERATION AND CONVERSION

    @staticmethod
    def monomials(nvars, max_degree, min_degree=0):
        """All exponent tuples with ``min_degree <= |e| <= max_degree``,
        in ascending grlex order."""
        result = []
        for degree in range(min_degree, max_degree + 1):
            block = [
                e
                for e in itertools.product(range(degree + 1), repeat=nvars)
                if sum(e) == degree
            ]
            result.extend(sorted(block))
        return result

    def to_sympy(self, symbols=None):
        """Return the polynomial as a sympy ``Poly`` over QQ."""
        if symbols is None:
            symbols = [sympy.Symbol(v) for v in self.vars]
        coefficients = {
            e: sympy.Rational(c.numerator, c.denominator)
            for e, c in self.terms.items()
        }
        return sympy.Poly.from_dict(coefficients or {(0,) * len(symbols): 0},
                                    *symbols, domain="QQ")

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            monomial = "*".join(
                v if k == 1 else "%s^%d" % (v, k)
                for v, k in zip(self.vars, e)
                if k
            )
            magnitude = abs(c)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = "%s*%s" % (magnitude, monomial)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "MPoly(%s | %s)" % (", ".join(self.vars), self)


def poly_arith(a, b, op):
    """Exact ``a op b`` for op in {"add", "sub", "mul"}.

    Raises VariableContextError when a and b live over different variables.
    """
    if op not in ("add", "sub", "mul"):
        raise ValueError("unknown operation %r" % op)
    a._check_context(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    return a * b


class RationalPoint:
    """A point of Q^d attached to a variable list.

    Parameters
    ----------

    variables
      The variable names, in the order of ``coords``.

    coords
      Exact coordinates (ints, Fractions or strings like ``"1/2"``).
    """

    __slots__ = ("vars", "coords")

    def __init__(self, variables, coords):
        self.vars = tuple(variables)
        self.coords = tuple(as_fraction(c) for c in coords)
        if len(self.coords) != len(self.vars):
            raise VariableContextError(
                "point %s has %d coordinates for variables %s"
                % (coords, len(self.coords), self.vars)
            )

    def to_json(self):
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data, variables):
        return cls(variables, data)

    def __eq__(self, other):
        return (
            isinstance(other, RationalPoint)
            and self.vars == other.vars
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.vars, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return "RationalPoint(%s)" % ", ".join(str(c) for c in self.coords)
