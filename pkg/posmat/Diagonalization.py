"""Symmetric diagonalization of polynomial matrices by polynomial
congruences."""

import logging
from fractions import Fraction

from .errors import DimensionError, InvariantBreach
from .MPoly import MPoly, rational_content
from .PolyMatrix import PolyMatrix, SymPolyMatrix, mat_mul

logger = logging.getLogger(__name__)


class Diagonalization:
    """Result of :func:`diagonalize` for a symmetric matrix A.

    The identities ``Xplus*Xminus = Xminus*Xplus = b*I``,
    ``Xminus*A*Xminus^T = D(d_1, ..., d_r, 0, ..., 0)`` and
    ``b^2*A = Xplus*D*Xplus^T`` hold exactly.

    Parameters
    ----------

    matrix
      The diagonalized matrix A.

    b
      Non-zero polynomial.

    diag
      The non-zero diagonal entries d_1, ..., d_r.

    Xplus, Xminus
      The two transformation matrices.
    """

    def __init__(self, matrix, b, diag, Xplus, Xminus):
        self.matrix = matrix
        self.b = b
        self.diag = list(diag)
        self.Xplus = Xplus
        self.Xminus = Xminus
        self._failures = None

    @property
    def rank(self):
        return len(self.diag)

    @property
    def n(self):
        return self.matrix.n

    @property
    def D(self):
        return PolyMatrix.diagonal(self.diag, self.matrix.vars, n=self.n)

    def failed_identities(self):
        """Names of the identities that do not hold exactly.

        With b != 0, Xplus*Xminus = b*I makes Xminus*Xplus = b*I, and with
        Xminus*A*Xminus^T = D it gives Xplus*D*Xplus^T = b^2*A; the last two
        products are only formed when an earlier check fails.
        The result is computed once and cached.
        """
        if self._failures is None:
            self._failures = self._check_identities()
        return list(self._failures)

    def _check_identities(self):
        A, D, n = self.matrix, self.D, self.n
        bI = PolyMatrix.identity(n, A.vars, scale=self.b)
        failures = []
        if self.b.is_zero():
            failures.append("b != 0")
        if any(d.is_zero() for d in self.diag):
            failures.append("d_i != 0")
        inverse_ok = mat_mul(self.Xplus, self.Xminus) == bI
        if not inverse_ok:
            failures.append("Xplus*Xminus = b*I")
        congruence_ok = A.congruence(self.Xminus.transpose()) == D
        if not congruence_ok:
            failures.append("Xminus*A*Xminus^T = D")
        if failures:
            if mat_mul(self.Xminus, self.Xplus) != bI:
                failures.append("Xminus*Xplus = b*I")
            if D.congruence(self.Xplus.transpose()) != A.scale(self.b * self.b):
                failures.append("b^2*A = Xplus*D*Xplus^T")
        return failures

    def verify(self):
        return not self.failed_identities()

    def degrees(self):
        """Degree of b and largest entry degree of Xplus and Xminus."""
        return {
            "b": self.b.degree(),
            "Xplus": self.Xplus.degree(),
            "Xminus": self.Xminus.degree(),
        }

    def to_json(self):
        return {
            "vars": list(self.matrix.vars),
            "matrix": self.matrix.to_json(),
            "b": str(self.b),
            "rank": self.rank,
            "diag": [str(d) for d in self.diag],
            "Xplus": self.Xplus.to_json(),
            "Xminus": self.Xminus.to_json(),
            "degrees": self.degrees(),
            "verified": self.verify(),
        }

    @classmethod
    def from_json(cls, data):
        variables = data["vars"]
        return cls(
            matrix=SymPolyMatrix.from_json(data["matrix"]),
            b=MPoly.from_string(data["b"], variables),
            diag=[MPoly.from_string(d, variables) for d in data["diag"]],
            Xplus=PolyMatrix.from_json(data["Xplus"]),
            Xminus=PolyMatrix.from_json(data["Xminus"]),
        )

    def __repr__(self):
        return "Diagonalization(b=%s, diag=[%s], rank=%d)" % (
            self.b,
            ", ".join(str(d) for d in self.diag),
            self.rank,
        )


def _choose_pivot(W, active):
    """Return (index, decoupled) of the next pivot, or None.

    Entries whose row is already zero outside the diagonal are taken first,
    in index order; otherwise the non-zero diagonal entry of least total
    degree (ties to the smallest index).
    """
    candidates = [i for i in active if not W[i][i].is_zero()]
    for q in candidates:
        if all(W[i][q].is_zero() for i in active if i != q):
            return q, True
    if candidates:
        q = min(candidates, key=lambda i: (W[i][i].degree(), i))
        return q, False
    return None


def diagonalize(A):
    """Diagonalize a symmetric polynomial matrix by congruence.

    Fraction-free symmetric elimination: every new entry is
    ``(p*W_ij - W_iq*W_jq) / p_previous``, an exact polynomial division.
    When no diagonal entry of the working block is non-zero, row and column
    j are added to row and column i for the first non-zero ``W_ij``.

    Parameters
    ----------

    A
      A SymPolyMatrix (or any PolyMatrix that is symmetric).

    Returns
    -------

    A :class:`Diagonalization` whose four identities have been re-checked by
    exact multiplication.
    """
    if not A.is_symmetric():
        raise DimensionError("diagonalize needs a symmetric matrix")
    variables, n = A.vars, A.n
    zero, one = MPoly.zero(variables), MPoly.one(variables)
    W = [list(row) for row in A.entries]
    T = [[one if i == j else zero for j in range(n)] for i in range(n)]
    active = list(range(n))
    p_previous = one
    order, diag, steps = [], [], []
    b = one

    while True:
        choice = _choose_pivot(W, active)
        if choice is None:
            pair = next(
                (
                    (i, j)
                    for a, i in enumerate(active)
                    for j in active[a + 1:]
                    if not W[i][j].is_zero()
                ),
                None,
            )
            if pair is None:
                break
            i, j = pair
            logger.debug("zero diagonal block: adding row/column %d to %d", j, i)
            T[i] = [t_i + t_j for t_i, t_j in zip(T[i], T[j])]
            new_ii = W[i][i] + W[i][j] + W[i][j] + W[j][j]
            for k in active:
                if k != i:
                    W[i][k] = W[k][i] = W[i][k] + W[j][k]
            W[i][i] = new_ii
            steps.append(("add", i, j))
            choice = (i, False)
        q, decoupled = choice
        pivot = W[q][q]
        active.remove(q)
        order.append(q)
        diag.append(p_previous * pivot)
        if decoupled:
            continue
        column = {i: W[i][q] for i in active}
        for i in active:
            T[i] = [
                (pivot * t_i - column[i] * t_q).exact_div(p_previous)
                for t_i, t_q in zip(T[i], T[q])
            ]
        for a, i in enumerate(active):
            for j in active[a:]:
                value = (pivot * W[i][j] - column[i] * column[j]).exact_div(
                    p_previous
                )
                W[i][j] = W[j][i] = value
        steps.append(("pivot", q, p_previous, pivot, column, list(active)))
        b = b * pivot
        p_previous = pivot

    order.extend(active)
    Xminus = PolyMatrix([T[i] for i in order], variables)
    Xplus = _assemble_inverse(steps, order, n, variables)
    result = _reduce_contents(A, b, diag, Xplus, Xminus)
    failures = result.failed_identities()
    if failures:
        logger.error("diagonalization identities failed: %s", failures)
        raise InvariantBreach("diagonalization failed: %s" % ", ".join(failures))
    return result


def _assemble_inverse(steps, order, n, variables):
    """Product of the scaled inverses of every elimination step, so that
    Xplus * Xminus = (product of the pivots) * I."""
    zero, one = MPoly.zero(variables), MPoly.one(variables)
    product = PolyMatrix.identity(n, variables)
    for step in steps:
        rows = [[zero] * n for _ in range(n)]
        if step[0] == "add":
            _, i, j = step
            for k in range(n):
                rows[k][k] = one
            rows[i][j] = -one
        else:
            _, q, p_previous, pivot, column, updated = step
            for k in range(n):
                rows[k][k] = pivot
            for i in updated:
                rows[i][i] = p_previous
                rows[i][q] = column[i]
        product = mat_mul(product, PolyMatrix(rows, variables))
    columns = [product.column(k) for k in order]
    return PolyMatrix(
        [[columns[k][i] for k in range(n)] for i in range(n)], variables
    )


def _reduce_contents(A, b, diag, Xplus, Xminus):
    """Divide out integer contents of the rows of Xminus and the common
    content of (b, Xplus); make the leading coefficient of b positive."""
    variables, n = A.vars, A.n
    minus_rows = [list(row) for row in Xminus.entries]
    plus_rows = [list(row) for row in Xplus.entries]
    diag = list(diag)
    for k in range(n):
        c = rational_content(
            coefficient
            for entry in minus_rows[k]
            for coefficient in entry.terms.values()
        )
        if c != 1:
            minus_rows[k] = [e.scale(1 / c) for e in minus_rows[k]]
            for i in range(n):
                plus_rows[i][k] = plus_rows[i][k].scale(c)
            if k < len(diag):
                diag[k] = diag[k].scale(1 / (c * c))
    g = rational_content(
        [c for c in b.terms.values()]
        + [c for row in plus_rows for e in row for c in e.terms.values()]
    )
    if b.leading_term()[1] < 0:
        g = -g
    if g != 1:
        b = b.scale(1 / g)
        plus_rows = [[e.scale(Fraction(1) / g) for e in row] for row in plus_rows]
    return Diagonalization(
        matrix=A,
        b=b,
        diag=diag,
        Xplus=PolyMatrix(plus_rows, variables),
        Xminus=PolyMatrix(minus_rows, variables),
    )
