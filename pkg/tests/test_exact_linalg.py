from fractions import Fraction

import numpy as np
from posmat.exact_linalg import (
    INDEFINITE,
    NEGATIVE,
    PD,
    PSD,
    classify,
    inertia,
    nullspace,
    principal_minors_nonnegative,
    psd_decomposition,
    solve_affine,
    solve_exact,
)


def test_classification():
    assert classify([[2, 1], [1, 2]]) == PD
    assert classify([[1, 1], [1, 1]]) == PSD
    assert classify([[0, 1], [1, 0]]) == INDEFINITE
    assert classify([[-1, 0], [0, 0]]) == NEGATIVE
    # zero diagonal needs the row/column addition
    assert inertia([[0, 1, 0], [1, 0, 0], [0, 0, 0]]) == (1, 1, 1)


def test_minors_agree_with_elimination():
    rng = np.random.default_rng(7)
    for _ in range(40):
        B = rng.integers(-2, 3, size=(3, 2))
        A = (B @ B.T).tolist()
        if rng.integers(2):
            A[0][0] -= 1
        expected = classify(A)
        assert principal_minors_nonnegative(A) == (expected in (PD, PSD))
        assert principal_minors_nonnegative(A, strict=True) == (expected == PD)


def test_linear_systems():
    rows = [[1, 1, 0], [0, 1, 1]]
    particular, basis = solve_affine(rows, [1, 2], 3)
    assert particular == [-1, 2, 0]
    assert basis == nullspace(rows, 3) == [[1, -1, 1]]
    assert solve_exact([[1, 2]], [3], 2) == [3, 0]
    assert solve_exact([[1], [1]], [0, 1], 1) is None
    inconsistent = [[1, 1], [2, 2]]
    solution, witness = solve_affine(inconsistent, [1, 3], 2)
    assert solution is None
    assert [sum(w * row[j] for w, row in zip(witness, inconsistent)) for j in range(2)] == [0, 0]
    assert witness[0] * 1 + witness[1] * 3 == 1


def test_psd_decomposition():
    A = [[4, 2], [2, Fraction(5, 2)]]
    terms = psd_decomposition(A)
    rebuilt = [[sum(d * v[i] * v[j] for d, v in terms) for j in range(2)] for i in range(2)]
    assert rebuilt == A
    assert psd_decomposition([[1, 2], [2, 1]]) is None
    assert psd_decomposition([[0, 1], [1, 0]]) is None
