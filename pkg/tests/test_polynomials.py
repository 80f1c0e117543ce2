"""Exact polynomials, points and polynomial matrices."""

from fractions import Fraction

import pytest
from posmat import MPoly, PolyMatrix, RationalPoint, SymPolyMatrix
from posmat.errors import DimensionError, ParseError, VariableContextError
from posmat.MPoly import poly_arith

XY = ("x", "y")


def test_parsing_and_printing():
    f = MPoly.from_string("3/2*x^2*y - y + 1", XY)
    assert f.coefficient((2, 1)) == Fraction(3, 2)
    assert f.coefficient((0, 1)) == -1
    assert f.constant_term() == 1
    assert f.degree() == 3
    assert MPoly.from_string(str(f), XY) == f
    assert MPoly.from_string("x**2", XY) == MPoly.from_string("x^2", XY)
    assert MPoly.from_string("0.5*x", XY) == MPoly.from_string("x/2", XY)


def test_parsing_errors():
    with pytest.raises(VariableContextError):
        MPoly.from_string("x + z", XY)
    with pytest.raises(ParseError):
        MPoly.from_string("x +* y", XY)
    with pytest.raises(ParseError):
        MPoly.from_string("1/x", XY)


def test_arithmetic():
    x, y = MPoly.variable(XY, "x"), MPoly.variable(XY, "y")
    f = (x + y) ** 2
    assert f == x * x + x * y.scale(2) + y * y
    assert f - f == 0
    assert (f + 1) - f == 1
    assert 1 - x == -(x - 1)
    assert (f * (x - y)).exact_div(x - y) == f
    with pytest.raises(VariableContextError):
        poly_arith(x, MPoly.variable(("x",), 0), "add")


def test_calculus_and_composition():
    x, y = MPoly.variable(XY, 0), MPoly.variable(XY, 1)
    f = x ** 3 + x * y
    assert f.diff("x") == x * x.scale(3) + y
    assert f.hessian()[0][1] == 1
    assert f.shift([1, 0]) == (x + 1) ** 3 + (x + 1) * y
    g = f.substitute([x + y, x - y], XY, max_degree=2)
    assert g == x * x - y * y
    assert f.truncate(2) == x * y
    assert f.homogeneous_part(3) == x ** 3


def test_evaluation():
    f = MPoly.from_string("x^2 - 2*y", XY)
    assert f.evaluate([Fraction(1, 2), 1]) == Fraction(-7, 4)
    point = RationalPoint(XY, ["1/2", "1"])
    assert f(point) == Fraction(-7, 4)
    assert point.to_json() == ["1/2", "1"]
    with pytest.raises(VariableContextError):
        f.evaluate([1])


def test_to_sympy():
    f = MPoly.from_string("x^2 - 2", ("x",))
    assert f.to_sympy().count_roots() == 2


def test_matrix_basics():
    x = MPoly.variable(("x",), 0)
    A = PolyMatrix([[1, x], [x, x * x]], ("x",))
    assert A.is_symmetric()
    assert A.det() == 0
    assert A.trace() == x * x + 1
    assert A.characteristic_coefficients() == [x * x + 1, MPoly.zero(("x",))]
    assert A.eval_psd([2]) == "PSD"
    B = PolyMatrix([[0, 1], [1, 0]], ("x",))
    assert B.eval_psd([0]) == "indefinite"
    assert PolyMatrix.identity(2, ("x",)).scale(-1).eval_psd([0]) == "negative"
    assert B.inertia_at([0]) == (1, 1, 0)


def test_symmetric_matrices_are_enforced():
    with pytest.raises(DimensionError):
        SymPolyMatrix([["1", "x"], ["0", "1"]], ("x",))
    with pytest.raises(DimensionError):
        PolyMatrix([["1", "x"]], ("x",))


def test_matrix_json():
    data = {"n": 2, "vars": ["x", "y"], "entries": [["1", "x"], ["x", "x^2"]]}
    A = PolyMatrix.from_json(data)
    assert A.to_json() == {
        "n": 2,
        "vars": ["x", "y"],
        "entries": [["1", "x"], ["x", "x^2"]],
    }
    assert PolyMatrix.from_json([["1", "x"], ["x", "x^2"]], XY) == A
