"""Exact linear algebra over the rationals.

Matrices here are plain lists of lists of ``Fraction``. The symmetric
factorization uses the same congruence trick as the polynomial
diagonalization: when every remaining diagonal entry is zero, row and column
j are added to row and column i so that the new diagonal entry is 2*a_ij.
Linear systems are solved with sympy's ``DomainMatrix`` over QQ.
"""

import itertools
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .MPoly import as_fraction

PD = "PD"
PSD = "PSD"
INDEFINITE = "indefinite"
NEGATIVE = "negative"


def to_fraction_matrix(rows):
    return [[as_fraction(value) for value in row] for row in rows]


def symmetric_ldl(matrix):
    """Congruence-diagonalize a rational symmetric matrix.

    Returns ``(pivots, n_zero)`` where ``pivots`` lists the non-zero diagonal
    entries produced by elimination and ``n_zero`` the size of the residual
    zero block. Every step is an invertible rational congruence, so the signs
    of the pivots give the inertia (Sylvester's law).
    """
    a = to_fraction_matrix(matrix)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    active = list(range(n))
    pivots = []
    while active:
        q = next((i for i in active if a[i][i] != 0), None)
        if q is None:
            pair = next(
                (
                    (i, j)
                    for i, j in itertools.combinations(active, 2)
                    if a[i][j] != 0
                ),
                None,
            )
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            q = i
        pivot = a[q][q]
        pivots.append(pivot)
        active.remove(q)
        for i in active:
            factor = a[i][q] / pivot
            if factor:
                for j in active:
                    a[i][j] -= factor * a[q][j]
    return pivots, len(active)


def inertia(matrix):
    """Return ``(n_plus, n_minus, n_zero)`` of a rational symmetric matrix."""
    pivots, n_zero = symmetric_ldl(matrix)
    n_plus = sum(1 for p in pivots if p > 0)
    return n_plus, len(pivots) - n_plus, n_zero


def classify(matrix):
    """Classify a rational symmetric matrix as PD, PSD, indefinite or
    negative (negative semidefinite and non-zero)."""
    n_plus, n_minus, n_zero = inertia(matrix)
    if n_minus == 0:
        return PD if n_zero == 0 else PSD
    if n_plus == 0:
        return NEGATIVE
    return INDEFINITE


def determinant(matrix):
    if not matrix:
        return Fraction(1)
    return from_qq(to_domain_matrix(matrix).det())


def principal_minors_nonnegative(matrix, strict=False):
    """Brute-force PSD (PD with ``strict``) test over all principal minors.

    Exponential in the size; meant as an independent cross-check of
    :func:`classify` on small matrices.
    """
    a = to_fraction_matrix(matrix)
    n = len(a)
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            minor = determinant([[a[i][j] for j in subset] for i in subset])
            if minor < 0 or (strict and minor == 0):
                return False
    return True


# DOMAINMATRIX BRIDGE


def to_qq(value):
    value = as_fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(rows, ncols=None):
    rows = [[to_qq(v) for v in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def from_domain_matrix(matrix):
    return [[from_qq(v) for v in row] for row in matrix.to_list()]


def rref(rows, ncols=None):
    """Reduced row echelon form: ``(rows, pivot_columns)``."""
    if not rows:
        return [], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    return from_domain_matrix(reduced), tuple(pivots)


def nullspace(rows, ncols):
    """Basis (list of vectors) of ``{v : rows @ v = 0}``, from the RREF.

    Basis vector k has a 1 at the k-th free column.
    """
    if not rows:
        return [
            [Fraction(int(i == k)) for i in range(ncols)] for k in range(ncols)
        ]
    reduced, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row_index, p in enumerate(pivots):
            vector[p] = -reduced[row_index][f]
        basis.append(vector)
    return basis


def solve_affine(rows, rhs, ncols):
    """Describe ``{v : rows @ v = rhs}`` exactly.

    Returns ``(particular, basis)`` with the general solution
    ``particular + sum z_k basis[k]``, or ``(None, witness)`` when the system
    is inconsistent, ``witness`` being a vector y with ``y @ rows = 0`` and
    ``y @ rhs = 1``.
    """
    m = len(rows)
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    if m == 0:
        return [Fraction(0)] * ncols, nullspace([], ncols)
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        # [A | b]^T y = (0, 1) has a solution: take it from the left nullspace
        transposed = [[augmented[i][j] for i in range(m)] for j in range(ncols)]
        transposed.append([augmented[i][ncols] for i in range(m)])
        target = [Fraction(0)] * ncols + [Fraction(1)]
        witness = solve_exact(transposed, target, m)
        return None, witness
    particular = [Fraction(0)] * ncols
    for row_index, p in enumerate(pivots):
        particular[p] = reduced[row_index][ncols]
    return particular, nullspace([row[:ncols] for row in augmented], ncols)


def solve_exact(rows, rhs, ncols):
    """One exact solution of ``rows @ v = rhs`` (None if inconsistent)."""
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for row_index, p in enumerate(pivots):
        solution[p] = reduced[row_index][ncols]
    return solution


def psd_decomposition(matrix):
    """Write a rational symmetric matrix as sum_k d_k v_k v_k^T with d_k > 0.

    Returns the list of ``(d_k, v_k)`` pairs, or None when the matrix is not
    positive semidefinite. Symmetric elimination with diagonal pivots: a
    negative pivot, or a zero diagonal facing a non-zero off-diagonal entry,
    proves indefiniteness.
    """
    a = to_fraction_matrix(matrix)
    n = len(a)
    active = list(range(n))
    terms = []
    while active:
        q = next((i for i in active if a[i][i] != 0), None)
        if q is None:
            if any(a[i][j] != 0 for i in active for j in active):
                return None
            break
        d = a[q][q]
        if d < 0:
            return None
        v = [Fraction(0)] * n
        for i in active:
            v[i] = a[i][q] / d
        terms.append((d, v))
        active.remove(q)
        for i in active:
            if v[i]:
                factor = d * v[i]
                for j in active:
                    a[i][j] -= factor * v[j]
    return terms
