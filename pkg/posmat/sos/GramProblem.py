"""Gram matrix formulation of cone membership identities."""

from fractions import Fraction

import numpy as np

from ..exact_linalg import classify, NEGATIVE, INDEFINITE
from ..MPoly import MPoly
from ..PolyMatrix import PolyMatrix


class GramBlock:
    """One unknown positive semidefinite matrix Q of an identity.

    The block contributes ``sum_{s,t} Q[s,t] R_s^T G R_t`` to the left-hand
    side, where G is the k x k symmetric ``multiplier`` and the R_s are
    k x n polynomial ``factors``. With k = n = 1 and R_s = u_s a monomial this
    is the usual ``g * u^T Q u``.

    Parameters
    ----------

    multiplier
      MPoly (k = 1) or symmetric PolyMatrix.

    factors
      List of k x n nested tuples of MPoly.

    tag
      Free label used by the searches to rebuild certificates.
    """

    def __init__(self, multiplier, factors, tag=None):
        if isinstance(multiplier, MPoly):
            multiplier = PolyMatrix([[multiplier]], multiplier.vars)
        self.multiplier = multiplier
        self.factors = [tuple(tuple(row) for row in R) for R in factors]
        self.tag = tag
        self.k = multiplier.n
        self.n = len(self.factors[0][0]) if self.factors else 1
        self._weighted = [self._apply_multiplier(R) for R in self.factors]

    @classmethod
    def scalar(cls, multiplier, basis, tag=None):
        """The block ``multiplier * sum Q[s,t] u_s u_t`` over a polynomial basis."""
        return cls(multiplier, [((u,),) for u in basis], tag)

    @classmethod
    def weighted(cls, multiplier, basis, n, tag=None):
        """The block ``multiplier * sum_k A_k^T A_k`` over 1 x n rows whose
        entries lie in the span of ``basis``."""
        zero = MPoly.zero(multiplier.vars)
        factors = []
        for u in basis:
            for i in range(n):
                row = [zero] * n
                row[i] = u
                factors.append((tuple(row),))
        return cls(multiplier, factors, tag)

    @classmethod
    def generator(cls, G, basis, tag=None):
        """The block ``sum_k B_k^T G B_k`` over n x n matrices B_k with
        entries in the span of ``basis``."""
        n = G.n
        zero = MPoly.zero(G.vars)
        factors = []
        for i in range(n):
            for u in basis:
                for p in range(n):
                    rows = [[zero] * n for _ in range(n)]
                    rows[i][p] = u
                    factors.append(tuple(tuple(r) for r in rows))
        return cls(G, factors, tag)

    @property
    def size(self):
        return len(self.factors)

    def _apply_multiplier(self, R):
        G = self.multiplier
        zero = MPoly.zero(G.vars)
        result = []
        for i in range(self.k):
            row = []
            for q in range(len(R[0])):
                total = zero
                for j in range(self.k):
                    if not G[i, j].is_zero() and not R[j][q].is_zero():
                        total = total + G[i, j] * R[j][q]
                row.append(total)
            result.append(row)
        return result

    def contribution(self, s, t):
        """The n x n polynomial matrix multiplying the unknown Q[s,t] (s <= t)
        in the expansion, symmetric parts included."""
        R, GR = self.factors[s], self._weighted[t]
        zero = MPoly.zero(self.multiplier.vars)
        X = [[zero] * self.n for _ in range(self.n)]
        for i in range(self.k):
            for p in range(self.n):
                if R[i][p].is_zero():
                    continue
                for q in range(self.n):
                    if not GR[i][q].is_zero():
                        X[p][q] = X[p][q] + R[i][p] * GR[i][q]
        if s == t:
            return X
        return [[X[p][q] + X[q][p] for q in range(self.n)] for p in range(self.n)]

    def combination(self, vector):
        """The k x n matrix sum_s vector[s] R_s."""
        zero = MPoly.zero(self.multiplier.vars)
        result = [[zero] * self.n for _ in range(self.k)]
        for w, R in zip(vector, self.factors):
            if not w:
                continue
            for i in range(self.k):
                for q in range(self.n):
                    if not R[i][q].is_zero():
                        result[i][q] = result[i][q] + R[i][q].scale(w)
        return result

    def restricted(self, W):
        """Block whose factors are the combinations given by the columns of W
        (a list of vectors)."""
        return GramBlock(
            self.multiplier,
            [tuple(tuple(row) for row in self.combination(w)) for w in W],
            self.tag,
        )

    def __repr__(self):
        return "GramBlock(tag=%r, size=%d, k=%d, n=%d)" % (
            self.tag,
            self.size,
            self.k,
            self.n,
        )


class GramProblem:
    """The identity ``sum_b block_b(Q_b) = target`` with every Q_b PSD,
    as an exact linear system on the upper-triangular Gram entries.

    Parameters
    ----------

    target
      MPoly or symmetric PolyMatrix (the right-hand side).

    blocks
      List of :class:`GramBlock` sharing the target's size n.

    extra_equations
      List of ``(coefficients, rhs)`` where coefficients maps
      ``(block_index, s, t)`` to a rational; used for normalizations such as
      a unit trace.
    """

    def __init__(self, target, blocks, extra_equations=()):
        if isinstance(target, MPoly):
            target = PolyMatrix([[target]], target.vars)
        self.target = target
        self.vars = target.vars
        self.n = target.n
        self.blocks = list(blocks)
        for block in self.blocks:
            if not block.size:
                raise ValueError("empty Gram block %r" % (block.tag,))
            if block.n != self.n:
                raise ValueError("block of size %d for a target of size %d"
                                 % (block.n, self.n))
        self.extra_equations = list(extra_equations)
        self.columns = [
            (b, s, t)
            for b, block in enumerate(self.blocks)
            for s in range(block.size)
            for t in range(s, block.size)
        ]
        self.column_index = {key: j for j, key in enumerate(self.columns)}
        self._system = None

    # EXACT LINEAR SYSTEM

    def _build(self):
        rows = {}
        for col, (b, s, t) in enumerate(self.columns):
            P = self.blocks[b].contribution(s, t)
            for p in range(self.n):
                for q in range(p, self.n):
                    for e, c in P[p][q].terms.items():
                        row = rows.setdefault((0, p, q, e), {})
                        row[col] = row.get(col, 0) + c
        for p in range(self.n):
            for q in range(p, self.n):
                for e in self.target[p, q].terms:
                    rows.setdefault((0, p, q, e), {})
        for k, (coefficients, _) in enumerate(self.extra_equations):
            row = rows.setdefault((1, k, 0, ()), {})
            for (b, s, t), c in coefficients.items():
                col = self.column_index[(b, min(s, t), max(s, t))]
                row[col] = row.get(col, 0) + Fraction(c)
        labels = sorted(rows)
        rhs = []
        for label in labels:
            if label[0] == 0:
                _, p, q, e = label
                rhs.append(self.target[p, q].coefficient(e))
            else:
                rhs.append(Fraction(self.extra_equations[label[1]][1]))
        sparse_rows = [
            {col: c for col, c in rows[label].items() if c} for label in labels
        ]
        columns = [dict() for _ in self.columns]
        for r, row in enumerate(sparse_rows):
            for col, c in row.items():
                columns[col][r] = c
        self._system = (labels, sparse_rows, columns, rhs)

    @property
    def labels(self):
        if self._system is None:
            self._build()
        return self._system[0]

    @property
    def rhs(self):
        if self._system is None:
            self._build()
        return self._system[3]

    def dense_rows(self):
        if self._system is None:
            self._build()
        zero = Fraction(0)
        result = []
        for row in self._system[1]:
            dense = [zero] * len(self.columns)
            for col, c in row.items():
                dense[col] = Fraction(c)
            result.append(dense)
        return result

    def column_entries(self, col):
        """Sparse column ``{row: coefficient}`` of the system."""
        if self._system is None:
            self._build()
        return self._system[2][col]

    # GRAM MATRICES

    def gram_matrices(self, vector):
        """Exact symmetric matrices of every block from an unknowns vector."""
        matrices = [
            [[Fraction(0)] * block.size for _ in range(block.size)]
            for block in self.blocks
        ]
        for (b, s, t), value in zip(self.columns, vector):
            matrices[b][s][t] = matrices[b][t][s] = Fraction(value)
        return matrices

    def block_index_arrays(self):
        """Per block, the arrays ``(s, t, columns)`` placing unknowns in it."""
        arrays = [([], [], []) for _ in self.blocks]
        for col, (b, s, t) in enumerate(self.columns):
            arrays[b][0].append(s)
            arrays[b][1].append(t)
            arrays[b][2].append(col)
        return [tuple(np.array(a, dtype=int) for a in item) for item in arrays]

    def numeric_matrices(self, vectors):
        """Floating block matrices of a batch of unknowns vectors.

        ``vectors`` has shape (K, n_unknowns); returns one (K, size, size)
        array per block.
        """
        vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
        result = []
        for block, (s, t, cols) in zip(self.blocks, self.block_index_arrays()):
            M = np.zeros((vectors.shape[0], block.size, block.size))
            M[:, s, t] = vectors[:, cols]
            M[:, t, s] = vectors[:, cols]
            result.append(M)
        return result

    # DUAL SIDE

    def moment_matrices(self, functional):
        """Exact matrices M_b with <M_b, Q_b> summed over blocks equal to
        ``sum_r functional[r] * (row r of the system applied to Q)``."""
        matrices = [
            [[Fraction(0)] * block.size for _ in range(block.size)]
            for block in self.blocks
        ]
        for col, (b, s, t) in enumerate(self.columns):
            total = Fraction(0)
            for r, c in self.column_entries(col).items():
                if functional[r]:
                    total += functional[r] * c
            if s != t:
                total /= 2
            matrices[b][s][t] = matrices[b][t][s] = total
        return matrices

    def functional_value(self, functional):
        return sum((L * c for L, c in zip(functional, self.rhs)), Fraction(0))

    def point_functional(self, points):
        """Functional summing point evaluations of the (scalar) identity.

        Its moment matrix on a block is sum_p g(p) u(p) u(p)^T, so it is PSD
        whenever the block's multiplier is non-negative at every point.
        """
        if self.n != 1:
            raise ValueError("point functionals need a scalar target")
        values = []
        for label in self.labels:
            if label[0] == 0:
                e = label[3]
                total = Fraction(0)
                for point in points:
                    term = Fraction(1)
                    for x, k in zip(point, e):
                        term *= Fraction(x) ** k
                    total += term
                values.append(total)
            else:
                values.append(Fraction(0))
        return values

    def restricted(self, bases):
        """Problem where block b is restricted to the span of ``bases[b]``
        (a list of vectors, or None to keep the block).

        Q_b becomes W Q'_b W^T; blocks restricted to an empty span are
        dropped and the extra equations are rewritten on the new unknowns.
        """
        blocks, new_index = [], {}
        for b, (block, W) in enumerate(zip(self.blocks, bases)):
            if W is not None and not W:
                continue
            new_index[b] = len(blocks)
            blocks.append(block if W is None else block.restricted(W))
        equations = []
        for coefficients, rhs in self.extra_equations:
            by_block = {}
            for (b, s, t), c in coefficients.items():
                by_block.setdefault(b, {})[(min(s, t), max(s, t))] = Fraction(c)
            rewritten = {}
            for b, entries in by_block.items():
                if b not in new_index:
                    continue
                W = bases[b]
                if W is None:
                    for (s, t), c in entries.items():
                        rewritten[(new_index[b], s, t)] = c
                    continue
                # symmetric matrix C with <C, Q> equal to the equation's left side
                C = {}
                for (s, t), c in entries.items():
                    if s == t:
                        C[(s, s)] = C.get((s, s), 0) + c
                    else:
                        C[(s, t)] = C.get((s, t), 0) + c / 2
                        C[(t, s)] = C.get((t, s), 0) + c / 2
                for a in range(len(W)):
                    for a2 in range(a, len(W)):
                        value = sum(
                            (W[a][s] * c * W[a2][t] for (s, t), c in C.items()),
                            Fraction(0),
                        )
                        if value:
                            rewritten[(new_index[b], a, a2)] = (
                                value if a == a2 else 2 * value
                            )
            equations.append((rewritten, rhs))
        return GramProblem(self.target, blocks, equations)

    def __repr__(self):
        return "GramProblem(n=%d, blocks=%d, unknowns=%d)" % (
            self.n,
            len(self.blocks),
            len(self.columns),
        )


class DualWitness:
    """A rational linear functional L on the equations of a GramProblem
    with every moment matrix PSD and L(rhs) < 0, which proves that no PSD
    Gram matrices satisfy the identity.

    Parameters
    ----------

    problem
      The :class:`GramProblem` the functional refers to.

    functional
      List of rationals, one per equation (in ``problem.labels`` order).
    """

    def __init__(self, problem, functional):
        self.problem = problem
        self.functional = [Fraction(v) for v in functional]

    @property
    def value(self):
        return self.problem.functional_value(self.functional)

    def verify(self):
        """Exact check of the sign conditions."""
        if self.value >= 0:
            return False
        for M in self.problem.moment_matrices(self.functional):
            if M and classify(M) in (NEGATIVE, INDEFINITE):
                return False
        return True

    def __bool__(self):
        return self.verify()

    def to_json(self):
        entries = []
        for label, value in zip(self.problem.labels, self.functional):
            if not value:
                continue
            if label[0] == 0:
                _, p, q, e = label
                monomial = MPoly.monomial(self.problem.vars, e)
                entries.append(
                    {"entry": [p, q], "monomial": str(monomial), "value": str(value)}
                )
            else:
                entries.append({"equation": label[1], "value": str(value)})
        return {"value": str(self.value), "functional": entries}

    def __repr__(self):
        return "DualWitness(L(target) = %s)" % self.value
