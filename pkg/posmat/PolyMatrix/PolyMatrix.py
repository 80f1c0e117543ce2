from fractions import Fraction

from ..errors import DimensionError, VariableContextError
from ..MPoly import MPoly

from .evaluation import EvaluableMatrixMixin
from .serialization import JsonMatrixMixin


class PolyMatrix(EvaluableMatrixMixin, JsonMatrixMixin):
    """Square matrix of polynomials over a shared variable list.

    Parameters
    ----------

    entries
      n x n nested list. Each entry is an MPoly over ``variables``, an exact
      scalar, or a string in the polynomial grammar.

    variables
      The variable names. If omitted, taken from the first MPoly entry.

    Instances are immutable; arithmetic returns new matrices. ``A * B`` is
    the matrix product when B is a matrix, a scaling when B is a polynomial
    or a scalar.
    """

    def __init__(self, entries, variables=None):
        rows = [list(row) for row in entries]
        n = len(rows)
        if n < 1:
            raise DimensionError("a polynomial matrix needs n >= 1")
        if any(len(row) != n for row in rows):
            raise DimensionError("polynomial matrices must be square")
        if variables is None:
            variables = next(
                (e.vars for row in rows for e in row if isinstance(e, MPoly)),
                None,
            )
            if variables is None:
                raise VariableContextError("cannot infer the variables")
        self.vars = tuple(variables)
        self.n = n
        self.entries = tuple(
            tuple(MPoly.coerce(e, self.vars) for e in row) for row in rows
        )

    # CONSTRUCTORS

    @classmethod
    def zeros(cls, n, variables):
        zero = MPoly.zero(variables)
        return cls([[zero] * n for _ in range(n)], variables)

    @classmethod
    def identity(cls, n, variables, scale=1):
        return cls.diagonal([scale] * n, variables)

    @classmethod
    def diagonal(cls, values, variables, n=None):
        """Diagonal matrix D(d_1, ..., d_r, 0, ..., 0) of size n."""
        values = list(values)
        n = len(values) if n is None else n
        if len(values) > n:
            raise DimensionError("%d diagonal values for n=%d" % (len(values), n))
        zero = MPoly.zero(variables)
        rows = [[zero] * n for _ in range(n)]
        for i, value in enumerate(values):
            rows[i][i] = MPoly.coerce(value, variables)
        return cls(rows, variables)

    @classmethod
    def unit(cls, i, j, n, variables):
        """Coordinate matrix E_ij."""
        zero = MPoly.zero(variables)
        rows = [[zero] * n for _ in range(n)]
        rows[i][j] = MPoly.one(variables)
        return cls(rows, variables)

    @classmethod
    def from_rows(cls, rows, variables):
        """Pad a list of k <= n row vectors with zero rows to an n x n
        matrix (n = length of the rows)."""
        rows = [list(r) for r in rows]
        n = len(rows[0])
        zero = MPoly.zero(variables)
        while len(rows) < n:
            rows.append([zero] * n)
        return cls(rows, variables)

    # ACCESS

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def row(self, i):
        return list(self.entries[i])

    def column(self, j):
        return [row[j] for row in self.entries]

    def map(self, function):
        return type(self)._unchecked(
            [[function(e) for e in row] for row in self.entries], self.vars
        )

    @classmethod
    def _unchecked(cls, rows, variables):
        matrix = PolyMatrix.__new__(PolyMatrix)
        matrix.vars = variables
        matrix.n = len(rows)
        matrix.entries = tuple(tuple(row) for row in rows)
        return matrix

    # PREDICATES

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def is_symmetric(self):
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def is_diagonal(self):
        return all(
            self.entries[i][j].is_zero()
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )

    def is_scalar_multiple_of_identity(self):
        """Return f if the matrix is f*I_n, else None."""
        if not self.is_diagonal():
            return None
        f = self.entries[0][0]
        if all(self.entries[i][i] == f for i in range(self.n)):
            return f
        return None

    def degree(self):
        return max(e.degree() for row in self.entries for e in row)

    # ARITHMETIC

    def _check(self, other):
        if not isinstance(other, PolyMatrix):
            raise TypeError("expected a PolyMatrix, got %r" % type(other))
        if other.n != self.n:
            raise DimensionError(
                "dimension mismatch: %d vs %d" % (self.n, other.n)
            )
        if other.vars != self.vars:
            raise VariableContextError(
                "variables %s differ from %s" % (self.vars, other.vars)
            )

    def __add__(self, other):
        self._check(other)
        return PolyMatrix._unchecked(
            [
                [a + b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self.entries, other.entries)
            ],
            self.vars,
        )

    def __sub__(self, other):
        self._check(other)
        return PolyMatrix._unchecked(
            [
                [a - b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self.entries, other.entries)
            ],
            self.vars,
        )

    def __neg__(self):
        return PolyMatrix._unchecked(
            [[-e for e in row] for row in self.entries], self.vars
        )

    def scale(self, factor):
        """Multiply every entry by a polynomial or an exact scalar."""
        if isinstance(factor, MPoly):
            if factor.vars != self.vars:
                raise VariableContextError("scaling polynomial in other variables")
        else:
            factor = Fraction(factor)
        return PolyMatrix._unchecked(
            [[e * factor for e in row] for row in self.entries], self.vars
        )

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return mat_mul(self, other)
        if isinstance(other, (MPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (MPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def transpose(self):
        return PolyMatrix._unchecked(
            [list(col) for col in zip(*self.entries)], self.vars
        )

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        total = MPoly.zero(self.vars)
        for i in range(self.n):
            total = total + self.entries[i][i]
        return total

    def power(self, exponent):
        result = PolyMatrix.identity(self.n, self.vars)
        for _ in range(int(exponent)):
            result = mat_mul(result, self)
        return result

    def congruence(self, other):
        """Return ``other^T * self * other``."""
        return mat_mul(mat_mul(other.transpose(), self), other)

    def characteristic_coefficients(self):
        """Sums of the k x k principal minors, for k = 1..n.

        Computed exactly with the Faddeev-LeVerrier recursion: with
        det(tI - A) = sum c_k t^k, the k-th minor sum is (-1)^k c_{n-k}.
        """
        n = self.n
        identity = PolyMatrix.identity(n, self.vars)
        m = PolyMatrix.zeros(n, self.vars)
        c_previous = MPoly.one(self.vars)
        sums = []
        for k in range(1, n + 1):
            m = mat_mul(self, m) + identity.scale(c_previous)
            c_previous = mat_mul(self, m).trace().scale(Fraction(-1, k))
            sums.append(c_previous.scale((-1) ** k))
        return sums

    def det(self):
        return self.characteristic_coefficients()[-1]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.vars == other.vars
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.vars, self.entries))

    def __repr__(self):
        rows = ", ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )
        return "%s([%s])" % (type(self).__name__, rows)


class SymPolyMatrix(PolyMatrix):
    """Symmetric polynomial matrix; construction checks symmetry exactly.

    Parameters
    ----------

    entries, variables
      As for :class:`PolyMatrix`. A ``DimensionError`` is raised if
      ``entries[i][j] != entries[j][i]`` for some i, j.
    """

    def __init__(self, entries, variables=None):
        PolyMatrix.__init__(self, entries, variables)
        if not self.is_symmetric():
            raise DimensionError("matrix is not symmetric: %r" % (self,))

    @classmethod
    def from_matrix(cls, matrix):
        if isinstance(matrix, SymPolyMatrix):
            return matrix
        return cls(matrix.entries, matrix.vars)


def mat_mul(a, b):
    """Exact product of two polynomial matrices of the same size and
    variables."""
    a._check(b)
    n = a.n
    zero = MPoly.zero(a.vars)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            total = zero
            for k in range(n):
                left = a.entries[i][k]
                if left.terms:
                    right = b.entries[k][j]
                    if right.terms:
                        total = total + left * right
            row.append(total)
        rows.append(row)
    return PolyMatrix._unchecked(rows, a.vars)
