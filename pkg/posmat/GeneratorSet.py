"""Matrix constraint sets and their scalar counterparts."""

import itertools

from .errors import DimensionError, ParseError, VariableContextError
from .MPoly import MPoly
from .PolyMatrix import PolyMatrix, SymPolyMatrix


class GeneratorSet:
    """A finite set of symmetric matrix generators and scalar generators
    defining the same set K = {x : G(x) PSD for every generator G}.

    Parameters
    ----------

    variables
      The variable names shared by every generator.

    n
      The size of the matrix generators (also the size of the matrices the
      cone certificates live in).

    matrix_gens
      List of SymPolyMatrix.

    scalar_gens
      List of MPoly.

    provenance
      One dict per scalar generator: ``{"matrix": k, "order": i}`` when it is
      the sum of the i x i principal minors of ``matrix_gens[k]``,
      ``{"matrix": None, "order": 0}`` when it was given directly.
    """

    def __init__(self, variables, n, matrix_gens=(), scalar_gens=(), provenance=None):
        self.vars = tuple(variables)
        self.n = int(n)
        self.matrix_gens = [SymPolyMatrix.from_matrix(G) for G in matrix_gens]
        self.scalar_gens = [MPoly.coerce(g, self.vars) for g in scalar_gens]
        if provenance is None:
            provenance = [{"matrix": None, "order": 0} for _ in self.scalar_gens]
        self.provenance = list(provenance)
        for G in self.matrix_gens:
            if G.n != self.n:
                raise DimensionError(
                    "generator of size %d in a set of size %d" % (G.n, self.n)
                )
            if G.vars != self.vars:
                raise VariableContextError("generators over different variables")
        if len(self.provenance) != len(self.scalar_gens):
            raise ValueError("provenance must cover every scalar generator")

    @classmethod
    def from_scalars(cls, variables, polynomials):
        """Scalar generator set (n = 1, each g also seen as the matrix [g])."""
        polynomials = [MPoly.coerce(g, variables) for g in polynomials]
        return cls(
            variables,
            1,
            matrix_gens=[PolyMatrix([[g]], variables) for g in polynomials],
            scalar_gens=polynomials,
            provenance=[{"matrix": k, "order": 1} for k in range(len(polynomials))],
        )

    def __len__(self):
        return len(self.scalar_gens)

    def __iter__(self):
        return iter(self.scalar_gens)

    def generator(self, index):
        """Scalar generator by 1-based index; index 0 is the constant 1."""
        if index == 0:
            return MPoly.one(self.vars)
        return self.scalar_gens[index - 1]

    def matrix_generator(self, index):
        """Matrix generator by 1-based index; index 0 is the identity."""
        if index == 0:
            return PolyMatrix.identity(self.n, self.vars)
        return self.matrix_gens[index - 1]

    def with_n(self, n):
        """Same scalar generators, certificates living in n x n matrices.

        When the size changes, the matrix generators become g * I_n for the
        scalar generators g, which define the same set K.
        """
        if n == self.n:
            return self
        return GeneratorSet(
            self.vars,
            n,
            matrix_gens=[PolyMatrix.identity(n, self.vars, scale=g) for g in self.scalar_gens],
            scalar_gens=self.scalar_gens,
            provenance=[dict(p) for p in self.provenance],
        )

    # MEMBERSHIP OF POINTS

    def values_at(self, point):
        return [g.evaluate(point) for g in self.scalar_gens]

    def contains(self, point):
        """Exact test of p in K (all scalar generators >= 0)."""
        return all(v >= 0 for v in self.values_at(point))

    def strictly_inside(self, point):
        """All scalar generators > 0 at p (strict-inequality interior)."""
        return all(v > 0 for v in self.values_at(point))

    def matrices_psd_at(self, point):
        return all(G.eval_psd(point) in ("PD", "PSD") for G in self.matrix_gens)

    # SERIALIZATION

    def to_json(self):
        return {
            "vars": list(self.vars),
            "n": self.n,
            "matrix_gens": [G.to_json() for G in self.matrix_gens],
            "scalar_gens": [str(g) for g in self.scalar_gens],
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data):
        try:
            variables = data["vars"]
            return cls(
                variables,
                data["n"],
                matrix_gens=[
                    PolyMatrix.from_json(G, variables) for G in data["matrix_gens"]
                ],
                scalar_gens=[
                    MPoly.from_string(g, variables) for g in data["scalar_gens"]
                ],
                provenance=data.get("provenance"),
            )
        except KeyError as err:
            raise ParseError("generator set without %s" % err)

    def __repr__(self):
        return "GeneratorSet(n=%d, scalar_gens=[%s])" % (
            self.n,
            ", ".join(str(g) for g in self.scalar_gens),
        )


def scalarize(matrix_gens, variables=None, n=None):
    """Scalar generators defining the same set as matrix generators.

    For each generator G_k and each i = 1..n, the sum p_{i,k} of all i x i
    principal minors of G_k. A real symmetric matrix is PSD iff all these
    sums are non-negative, as its characteristic polynomial is real-rooted.

    Parameters
    ----------

    matrix_gens
      List of symmetric polynomial matrices of a common size.

    variables, n
      Needed only when ``matrix_gens`` is empty.
    """
    matrix_gens = [SymPolyMatrix.from_matrix(G) for G in matrix_gens]
    if matrix_gens:
        variables = matrix_gens[0].vars if variables is None else variables
        n = matrix_gens[0].n if n is None else n
    elif variables is None or n is None:
        raise ValueError("an empty generator list needs variables and n")
    for G in matrix_gens:
        if G.n != n:
            raise DimensionError("generators of sizes %d and %d" % (n, G.n))
        if G.vars != tuple(variables):
            raise VariableContextError("generators over different variables")
    scalar_gens, provenance = [], []
    for k, G in enumerate(matrix_gens):
        for order, coefficient in enumerate(G.characteristic_coefficients(), 1):
            scalar_gens.append(coefficient)
            provenance.append({"matrix": k, "order": order})
    return GeneratorSet(variables, n, matrix_gens, scalar_gens, provenance)


def _quadratic_form_vectors(n):
    """Standard basis vectors and their pairwise sums."""
    vectors = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    vectors += [
        tuple(int(k in (i, j)) for k in range(n))
        for i, j in itertools.combinations(range(n), 2)
    ]
    return vectors


def quadratic_form_values(generator_set):
    """The scalar polynomials v^T G v for every matrix generator G and every
    v among the basis vectors and their pairwise sums, without repeats."""
    values = []
    for G in generator_set.matrix_gens:
        for v in _quadratic_form_vectors(G.n):
            form = MPoly.zero(G.vars)
            for i, vi in enumerate(v):
                for j, vj in enumerate(v):
                    if vi and vj:
                        form = form + G[i, j]
            if not form.is_zero() and form not in values:
                values.append(form)
    return values


def preorder_generators(generator_set, product_cap=2):
    """Matrix generators of a quadratic module inside the preordering.

    Returns the matrix generators followed by ``(product of s forms) * I_n``
    for every multiset of 1 <= s <= ``product_cap`` forms v^T G v (see
    :func:`quadratic_form_values`). Repeated matrices are listed once.
    """
    if product_cap < 0:
        raise ValueError("product_cap must be non-negative")
    result = []
    for G in generator_set.matrix_gens:
        if G not in result:
            result.append(G)
    if product_cap == 0:
        return result
    forms = quadratic_form_values(generator_set)
    n, variables = generator_set.n, generator_set.vars
    for size in range(1, product_cap + 1):
        for selection in itertools.combinations_with_replacement(forms, size):
            product = MPoly.one(variables)
            for form in selection:
                product = product * form
            matrix = SymPolyMatrix(
                PolyMatrix.identity(n, variables, scale=product).entries, variables
            )
            if matrix not in result:
                result.append(matrix)
    return result
