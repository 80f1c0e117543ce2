from ..errors import ParseError
from ..MPoly import MPoly, as_fraction
from ..PolyMatrix import PolyMatrix, mat_mul
from .SosCert import SosCert

MODULE = "module"
PREORDER = "preorder"

MATRIX_GENERATORS = "M_gens"
MODULE_POWER = "M_G^n"
PREORDER_POWER = "T_G^n"


class ScalarConeCert:
    """Membership certificate in the quadratic module M_G or the
    preordering T_G of scalar generators g_1, ..., g_m.

    Parameters
    ----------

    variables
      The variables of the generators.

    cone
      ``"module"``: each selector is an index i (0 for the constant 1, i for
      g_i) and the certificate denotes sum_i s_i g_i.
      ``"preorder"``: each selector is a 0/1 tuple sigma of length m and the
      certificate denotes sum_sigma s_sigma g_1^sigma_1 ... g_m^sigma_m.

    terms
      List of ``(selector, SosCert)`` pairs.
    """

    def __init__(self, variables, cone, terms=()):
        if cone not in (MODULE, PREORDER):
            raise ValueError("unknown scalar cone %r" % cone)
        self.vars = tuple(variables)
        self.cone = cone
        self.terms = [
            (tuple(sel) if cone == PREORDER else int(sel), sos)
            for sel, sos in terms
        ]

    @classmethod
    def sos(cls, sos_cert, cone=MODULE, n_gens=0):
        """Certificate made of a single sum of squares (selector "1")."""
        selector = 0 if cone == MODULE else (0,) * n_gens
        return cls(sos_cert.vars, cone, [(selector, sos_cert)])

    @classmethod
    def zero(cls, variables, cone=MODULE):
        return cls(variables, cone, [])

    def multiplier(self, selector, generators):
        """The product of generators a selector stands for."""
        one = MPoly.one(self.vars)
        if self.cone == MODULE:
            return one if selector == 0 else generators[selector - 1]
        product = one
        for g, s in zip(generators, selector):
            if s:
                product = product * g
        return product

    def selectors_valid(self, n_gens):
        for selector, _ in self.terms:
            if self.cone == MODULE:
                if not 0 <= selector <= n_gens:
                    return False
            elif len(selector) != n_gens or any(s not in (0, 1) for s in selector):
                return False
        return True

    def expand(self, generators):
        """The polynomial denoted, given the scalar generators (a list of
        MPoly or a GeneratorSet)."""
        generators = list(generators)
        total = MPoly.zero(self.vars)
        for selector, sos in self.terms:
            total = total + sos.expand() * self.multiplier(selector, generators)
        return total

    def sos_parts(self):
        return [sos for _, sos in self.terms]

    def has_positive_weights(self):
        return all(sos.has_positive_weights() for sos in self.sos_parts())

    # ALGEBRA ON CERTIFICATES

    def as_preorder(self, n_gens):
        """The same certificate written with preordering selectors."""
        if self.cone == PREORDER:
            return self
        terms = []
        for selector, sos in self.terms:
            sigma = tuple(int(selector == k + 1) for k in range(n_gens))
            terms.append((sigma, sos))
        return ScalarConeCert(self.vars, PREORDER, terms)

    def scaled(self, factor):
        """Certificate of ``factor`` times the denoted polynomial, factor > 0."""
        return ScalarConeCert(
            self.vars,
            self.cone,
            [(sel, sos.scaled(factor)) for sel, sos in self.terms],
        )

    def times_sos(self, sos_cert):
        """Certificate of (sum of squares) times the denoted polynomial."""
        return ScalarConeCert(
            self.vars,
            self.cone,
            [(sel, sos.times(sos_cert)) for sel, sos in self.terms],
        )

    def plus(self, other, n_gens=None):
        """Certificate of the sum of two denoted polynomials."""
        a, b = self, other
        if a.cone != b.cone:
            a, b = a.as_preorder(n_gens), b.as_preorder(n_gens)
        return ScalarConeCert(a.vars, a.cone, a.terms + b.terms)

    def plus_constant(self, value, n_gens=0):
        """Certificate of the denoted polynomial plus a constant >= 0."""
        value = as_fraction(value)
        if value == 0:
            return self
        if self.cone == PREORDER and self.terms:
            n_gens = len(self.terms[0][0])
        unit = ScalarConeCert.sos(SosCert.constant(self.vars, value), self.cone, n_gens)
        return self.plus(unit, n_gens)

    def merged(self):
        """Same certificate with the terms of equal selectors merged."""
        groups = {}
        for selector, sos in self.terms:
            groups[selector] = groups[selector] + sos if selector in groups else sos
        return ScalarConeCert(self.vars, self.cone, list(groups.items()))

    def to_json(self):
        return {
            "type": "scalar_cone",
            "cone": self.cone,
            "vars": list(self.vars),
            "terms": [
                {
                    "selector": list(sel) if self.cone == PREORDER else sel,
                    "sos": sos.to_json(),
                }
                for sel, sos in self.terms
            ],
        }

    @classmethod
    def from_json(cls, data):
        try:
            variables = data["vars"]
            return cls(
                variables,
                data["cone"],
                [
                    (term["selector"], SosCert.from_json(term["sos"], variables))
                    for term in data["terms"]
                ],
            )
        except (KeyError, TypeError) as err:
            raise ParseError("malformed scalar cone certificate: %s" % err)

    def __repr__(self):
        return "ScalarConeCert(%s, %d terms)" % (self.cone, len(self.terms))


class GeneratorTerm:
    """The term ``scale * A^T G A`` of a matrix quadratic module
    certificate (G a matrix generator, index 0 standing for I_n)."""

    def __init__(self, generator, A, scale=1):
        self.generator = int(generator)
        self.A = A
        self.scale = as_fraction(scale)

    def expand(self, generators, n):
        G = (
            PolyMatrix.identity(n, self.A.vars)
            if self.generator == 0
            else generators[self.generator - 1]
        )
        return mat_mul(mat_mul(self.A.transpose(), G), self.A).scale(self.scale)

    def congruence(self, B):
        return GeneratorTerm(self.generator, mat_mul(self.A, B), self.scale)

    def scaled(self, factor):
        return GeneratorTerm(self.generator, self.A, self.scale * as_fraction(factor))

    def to_json(self):
        return {
            "generator": self.generator,
            "A": self.A.to_json(),
            "scale": str(self.scale),
        }

    @classmethod
    def from_json(cls, data, variables):
        return cls(
            data["generator"],
            PolyMatrix.from_json(data["A"], variables),
            data.get("scale", 1),
        )


class WeightedTerm:
    """The term ``m * A^T A`` where the scalar weight m carries its own
    cone certificate."""

    def __init__(self, weight, weight_cert, A):
        self.weight = weight
        self.weight_cert = weight_cert
        self.A = A

    def expand(self):
        return mat_mul(self.A.transpose(), self.A).scale(self.weight)

    def congruence(self, B):
        return WeightedTerm(self.weight, self.weight_cert, mat_mul(self.A, B))

    def scaled(self, factor):
        factor = as_fraction(factor)
        return WeightedTerm(
            self.weight.scale(factor), self.weight_cert.scaled(factor), self.A
        )

    def to_json(self):
        return {
            "weight": str(self.weight),
            "weight_cert": self.weight_cert.to_json(),
            "A": self.A.to_json(),
        }

    @classmethod
    def from_json(cls, data, variables):
        return cls(
            MPoly.from_string(data["weight"], variables),
            ScalarConeCert.from_json(data["weight_cert"]),
            PolyMatrix.from_json(data["A"], variables),
        )


class MatrixConeCert:
    """Membership certificate for an n x n symmetric polynomial matrix.

    Parameters
    ----------

    variables, n
      Variables and size of the certified matrix.

    cone
      ``"M_gens"``: the quadratic module generated by matrix generators,
      terms are :class:`GeneratorTerm`. ``"M_G^n"`` or ``"T_G^n"``: sums
      sum_i m_i A_i^T A_i with m_i in M_G (resp. T_G) of the scalar
      generators, terms are :class:`WeightedTerm`.

    terms
      The list of terms.

    generators
      For ``"M_gens"`` only: explicit matrix generators the generator
      indices refer to. ``None`` means the matrix generators of the
      generator set the certificate is checked against.
    """

    def __init__(self, variables, n, cone, terms=(), generators=None):
        if cone not in (MATRIX_GENERATORS, MODULE_POWER, PREORDER_POWER):
            raise ValueError("unknown matrix cone %r" % cone)
        self.vars = tuple(variables)
        self.n = int(n)
        self.cone = cone
        self.terms = list(terms)
        self.generators = None if generators is None else list(generators)

    def generator_list(self, generator_set):
        if self.generators is not None:
            return self.generators
        return generator_set.matrix_gens if generator_set is not None else []

    def expand(self, generator_set=None):
        total = PolyMatrix.zeros(self.n, self.vars)
        if self.cone == MATRIX_GENERATORS:
            generators = self.generator_list(generator_set)
            for term in self.terms:
                total = total + term.expand(generators, self.n)
        else:
            for term in self.terms:
                total = total + term.expand()
        return total

    def congruence(self, B):
        """Certificate of B^T X B, X the matrix denoted by this one."""
        return MatrixConeCert(
            self.vars,
            self.n,
            self.cone,
            [term.congruence(B) for term in self.terms],
            self.generators,
        )

    def scaled(self, factor):
        return MatrixConeCert(
            self.vars,
            self.n,
            self.cone,
            [term.scaled(factor) for term in self.terms],
            self.generators,
        )

    def plus(self, other):
        if other.cone != self.cone or other.n != self.n:
            raise ValueError("cannot add certificates of different cones")
        return MatrixConeCert(
            self.vars, self.n, self.cone, self.terms + other.terms, self.generators
        )

    def square_term(self, B, n_gens=0):
        """Certificate of the single term B^T B in this certificate's cone."""
        if self.cone == MATRIX_GENERATORS:
            term = GeneratorTerm(0, B)
        else:
            cone = MODULE if self.cone == MODULE_POWER else PREORDER
            one = ScalarConeCert.sos(SosCert.unit(self.vars), cone, n_gens)
            term = WeightedTerm(MPoly.one(self.vars), one, B)
        return MatrixConeCert(self.vars, self.n, self.cone, [term], self.generators)

    def to_json(self):
        data = {
            "type": "matrix_cone",
            "cone": self.cone,
            "vars": list(self.vars),
            "n": self.n,
            "terms": [term.to_json() for term in self.terms],
        }
        if self.generators is not None:
            data["generators"] = [G.to_json() for G in self.generators]
        return data

    @classmethod
    def from_json(cls, data):
        try:
            variables = data["vars"]
            cone = data["cone"]
            term_class = GeneratorTerm if cone == MATRIX_GENERATORS else WeightedTerm
            generators = data.get("generators")
            if generators is not None:
                generators = [PolyMatrix.from_json(G, variables) for G in generators]
            return cls(
                variables,
                data["n"],
                cone,
                [term_class.from_json(t, variables) for t in data["terms"]],
                generators,
            )
        except (KeyError, TypeError) as err:
            raise ParseError("malformed matrix cone certificate: %s" % err)

    def __repr__(self):
        return "MatrixConeCert(%s, n=%d, %d terms)" % (
            self.cone,
            self.n,
            len(self.terms),
        )
