"""From floating solver output to exact rational data."""

from fractions import Fraction

import numpy as np

from ..exact_linalg import from_qq, nullspace, to_domain_matrix


def denominator_ladder(bound):
    """Denominators 10, 100, ... below ``bound``, then ``bound`` itself."""
    ladder = []
    denominator = 10
    while denominator < bound:
        ladder.append(denominator)
        denominator *= 10
    ladder.append(int(bound))
    return ladder


def rationalize(values, denominator):
    """Closest fractions with denominators at most ``denominator``
    (continued-fraction rounding)."""
    return [Fraction(float(v)).limit_denominator(denominator) for v in values]


class AffineProjector:
    """Exact orthogonal projection onto ``{particular + sum z_k basis[k]}``.

    The Gram matrix of the basis is formed once; every projection is then
    one exact solve over QQ.
    """

    def __init__(self, particular, basis):
        self.particular = list(particular)
        self.basis = list(basis)
        self.dimension = len(self.particular)
        if self.basis:
            self._N = to_domain_matrix(self.basis, self.dimension)
            self._gram = self._N * self._N.transpose()

    def project(self, point):
        if not self.basis:
            return list(self.particular)
        difference = [[Fraction(p) - q] for p, q in zip(point, self.particular)]
        rhs = self._N * to_domain_matrix(difference, 1)
        z = self._gram.lu_solve(rhs)
        combination = z.transpose() * self._N
        offsets = [from_qq(v) for v in combination.to_list()[0]]
        return [q + o for q, o in zip(self.particular, offsets)]

    def free_coordinates(self, vector):
        """Numeric coordinates z of a point of the affine space (least squares)."""
        if not self.basis:
            return np.zeros(0)
        N = np.array([[float(v) for v in row] for row in self.basis])
        q0 = np.array([float(v) for v in self.particular])
        return np.linalg.lstsq(N.T, np.asarray(vector) - q0, rcond=None)[0]


def _numeric_rref(matrix, tolerance=1e-9):
    M = np.array(matrix, dtype=float)
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        pivot = rank + int(np.argmax(np.abs(M[rank:, c])))
        if abs(M[pivot, c]) < tolerance:
            continue
        M[[rank, pivot]] = M[[pivot, rank]]
        M[rank] /= M[rank, c]
        for i in range(rows):
            if i != rank:
                M[i] -= M[i, c] * M[rank]
        rank += 1
    return M[:rank]


def rational_kernel(vectors, denominator=1000):
    """Rational rows spanning (approximately) the same space as the given
    floating row vectors, read off their reduced echelon form."""
    reduced = _numeric_rref(vectors)
    if reduced.shape[0] == 0:
        return []
    return [rationalize(row, denominator) for row in reduced]


def complement_basis(kernel_rows, size):
    """Exact basis of the vectors orthogonal to every kernel row."""
    return nullspace(kernel_rows, size)
