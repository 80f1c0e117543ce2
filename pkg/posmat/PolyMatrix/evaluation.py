import numpy as np

from ..exact_linalg import classify, inertia
from ..MPoly import as_fraction


class EvaluableMatrixMixin:
    """Exact and floating evaluation of polynomial matrices at points."""

    def evaluate(self, point):
        """Return the rational matrix A(p) as a list of lists of Fraction."""
        coords = [as_fraction(c) for c in getattr(point, "coords", point)]
        return [[entry.evaluate(coords) for entry in row] for row in self.entries]

    def evaluate_float(self, points):
        """Return an (m, n, n) float array of A evaluated at m points."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        values = np.zeros((points.shape[0], self.n, self.n))
        for i, row in enumerate(self.entries):
            for j, entry in enumerate(row):
                values[:, i, j] = entry.evaluate_float(points)
        return values

    def eval_psd(self, point):
        """Classify A(p) as "PD", "PSD", "indefinite" or "negative".

        Exact: symmetric LDL^T over the rationals, no floating point.
        """
        return classify(self.evaluate(point))

    def inertia_at(self, point):
        """Return ``(n_plus, n_minus, n_zero)`` of A(p)."""
        return inertia(self.evaluate(point))
