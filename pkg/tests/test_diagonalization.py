import numpy as np
import pytest
from posmat import PolyMatrix, SymPolyMatrix, diagonalize
from posmat.Diagonalization import Diagonalization
from posmat.errors import DimensionError
from posmat.sampling import random_points
from posmat.selftest import random_symmetric_matrix

XY = ("x", "y")


def test_hyperbolic_matrix():
    A = SymPolyMatrix([[0, 1], [1, 0]], ("x",))
    decomposition = diagonalize(A)
    assert decomposition.b == 2
    assert decomposition.rank == 2
    assert decomposition.verify()
    assert decomposition.D.inertia_at([0]) == (1, 1, 0)


def test_identity_is_left_alone():
    decomposition = diagonalize(PolyMatrix.identity(3, ("x",)))
    assert decomposition.b == 1
    assert decomposition.diag == [1, 1, 1]


def test_rank_deficient_matrix():
    A = SymPolyMatrix([["1", "x"], ["x", "x^2"]], ("x",))
    decomposition = diagonalize(A)
    assert decomposition.rank == 1
    assert decomposition.verify()
    assert decomposition.D[1, 1] == 0


def test_zero_matrix():
    decomposition = diagonalize(PolyMatrix.zeros(2, XY))
    assert decomposition.rank == 0
    assert decomposition.verify()


def test_polynomial_pivots():
    A = SymPolyMatrix(
        [["x^2 + 1", "x*y", "y"], ["x*y", "y^2 + 2", "x"], ["y", "x", "0"]], XY
    )
    decomposition = diagonalize(A)
    assert decomposition.failed_identities() == []
    assert not decomposition.b.is_zero()


def test_tampered_decomposition_is_caught():
    A = SymPolyMatrix([[0, 1], [1, 0]], ("x",))
    d = diagonalize(A)
    tampered = Diagonalization(A, d.b, d.diag, d.Xplus.scale(2), d.Xminus)
    failures = tampered.failed_identities()
    assert failures == [
        "Xplus*Xminus = b*I",
        "Xminus*Xplus = b*I",
        "b^2*A = Xplus*D*Xplus^T",
    ]
    failures.append("edited")
    assert tampered.failed_identities() == failures[:-1]
    assert not tampered.verify()
    bent = Diagonalization(A, d.b, [d.diag[0], d.diag[1] + 1], d.Xplus, d.Xminus)
    assert "Xminus*A*Xminus^T = D" in bent.failed_identities()


def test_non_symmetric_input_is_refused():
    with pytest.raises(DimensionError):
        diagonalize(PolyMatrix([["1", "x"], ["0", "1"]], ("x",)))


def test_random_matrices_keep_their_inertia():
    rng = np.random.default_rng(123)
    for k in range(15):
        n = 1 + k % 4
        A = random_symmetric_matrix(rng, n, XY)
        decomposition = diagonalize(A)
        assert decomposition.verify()
        for point in random_points(XY, 5, seed=k):
            if decomposition.b(point) != 0:
                assert A.inertia_at(point) == decomposition.D.inertia_at(point)


def test_json_round_trip():
    A = SymPolyMatrix([["x", "1"], ["1", "y"]], XY)
    data = diagonalize(A).to_json()
    assert data["verified"]
    assert Diagonalization.from_json(data).to_json() == data
