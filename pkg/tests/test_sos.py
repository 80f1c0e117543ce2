import pytest
from posmat import GeneratorSet, MPoly, PolyMatrix, SearchBudget, psd_witness
from posmat.certificates import (
    EMPTY,
    MODULE,
    PREORDER,
    PSD_FORM,
    STRICT,
    verify_any,
    verify_denominator_cert,
    verify_ks,
)
from posmat.sos import (
    CERTIFIED,
    COUNTEREXAMPLE,
    INCONCLUSIVE,
    INFEASIBLE_AT_BUDGET,
    MATRIX_MODULE,
    SCALAR_MODULE,
    SCALAR_PREORDER,
    archimedean_check,
    artin_search,
    bounded_element_check,
    cone_search,
    half_support,
    ks_search,
    sos_decompose,
)

X, XY = ("x",), ("x", "y")
MOTZKIN = "x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1"


def poly(text, variables=X):
    return MPoly.from_string(text, variables)


def test_budget():
    budget = SearchBudget(max_sos_degree=6)
    assert budget.degree_ladder(1) == [2, 4, 6]
    assert budget.with_degree(2).max_sos_degree == 2
    assert SearchBudget.from_environment({"POSMAT_MAX_DEGREE": "4"},
                                         max_sos_degree=8).max_sos_degree == 4
    with pytest.raises(ValueError):
        SearchBudget(jobs=0)
    with pytest.raises(ValueError):
        SearchBudget.from_environment({"POSMAT_MAX_DEGREE": "lots"})


def test_newton_polytope_basis():
    support = half_support(poly("x^4*y^2 + x^2*y^4 + 1", XY))
    assert (1, 1) in support and (0, 0) in support
    assert (2, 0) not in support


@pytest.mark.parametrize(
    "text, variables",
    [
        ("(x - 1)^2", X),
        ("1 + x^2", X),
        ("2*x^4 + 5", X),
        ("(x + y)^4 + (x - y)^2", XY),
    ],
)
def test_exact_decompositions(text, variables):
    f = poly(text, variables)
    result = sos_decompose(f)
    assert result.status == CERTIFIED
    assert result.certificate.expand() == f
    assert result.certificate.has_positive_weights()


def test_odd_degree_is_inconclusive():
    result = sos_decompose(poly("x^3"))
    assert result.status == INCONCLUSIVE
    assert result.to_json()["reason"] == "odd degree"


def test_motzkin():
    motzkin = poly(MOTZKIN, XY)
    result = sos_decompose(motzkin, SearchBudget(max_sos_degree=6))
    assert result.status == INFEASIBLE_AT_BUDGET
    assert result.witness is not None
    assert "budget_reached" in result.to_json()
    result = artin_search(motzkin, SearchBudget(max_sos_degree=8))
    assert result.status == CERTIFIED
    assert verify_denominator_cert(motzkin, result.certificate, None)


def test_cone_searches():
    interval = GeneratorSet.from_scalars(X, ["1 - x^2"])
    result = cone_search(poly("2 - x"), interval, MODULE)
    assert result and verify_any(poly("2 - x"), result.certificate, interval)
    unit = GeneratorSet.from_scalars(X, ["x", "1 - x"])
    result = cone_search(poly("x - x^2"), unit, PREORDER)
    assert result and result.certificate.cone == PREORDER
    assert cone_search(poly("1 - x"), unit, MODULE).certificate.terms[0][0] == 2
    with pytest.raises(ValueError):
        cone_search(poly("x"), unit, "cone")


def test_krivine_stengle_forms():
    interval = GeneratorSet.from_scalars(X, ["1 - x^2"])
    F = PolyMatrix([["3 - x"]], X)
    result = ks_search(F, interval, STRICT)
    assert result.status == CERTIFIED
    assert verify_ks(F, result.certificate, interval)
    G = PolyMatrix([["2 - x", "0"], ["0", "1"]], X)
    result = ks_search(G, interval.with_n(2), PSD_FORM)
    assert result and verify_ks(G, result.certificate, interval.with_n(2))
    empty = GeneratorSet.from_scalars(X, ["-1"])
    result = ks_search(None, empty, EMPTY)
    assert result and verify_ks(None, result.certificate, empty)
    with pytest.raises(ValueError):
        ks_search(None, interval, STRICT)


def test_archimedean_disk():
    disk = GeneratorSet.from_scalars(XY, ["1 - x^2 - y^2"])
    budget = SearchBudget(max_sos_degree=2)
    result = archimedean_check(disk, SCALAR_MODULE, budget)
    assert result.certificate.r == 1
    assert archimedean_check(disk, SCALAR_PREORDER, budget)
    lifted = archimedean_check(disk.with_n(2), MATRIX_MODULE, budget).certificate
    assert lifted.verify()
    bigger = lifted.at(4)
    assert bigger.r == 4 and bigger.verify()
    rho, bounds = bigger.linear_bounds()
    assert set(bounds) == {(0, 1), (0, -1), (1, 1), (1, -1)}


def test_no_generators_is_not_archimedean():
    empty = GeneratorSet.from_scalars(X, [])
    budget = SearchBudget(max_sos_degree=4, r_ladder=(1, 16))
    assert archimedean_check(empty, SCALAR_MODULE, budget).status == INCONCLUSIVE


def test_bounded_element():
    interval = GeneratorSet.from_scalars(X, ["1 - x^2"])
    A = PolyMatrix.diagonal([poly("x"), 0], X)
    result = bounded_element_check(A, interval, SearchBudget(max_sos_degree=2))
    witness = result.certificate
    assert witness.r == 1
    plus, minus = witness.linear_certs
    gens = interval.with_n(2)
    assert verify_any(PolyMatrix.identity(2, X) + A, plus, gens)
    assert verify_any(PolyMatrix.identity(2, X) - A, minus, gens)


def test_global_psd():
    assert psd_witness(PolyMatrix.identity(3, X)).status == CERTIFIED
    result = psd_witness(PolyMatrix([["x"]], X))
    assert result.status == COUNTEREXAMPLE
    assert result.witness.coords == (-1,)
    line = PolyMatrix([["1", "x"], ["x", "x^2"]], X)
    result = psd_witness(line)
    assert result.status == CERTIFIED
    b = MPoly.from_string(result.details["b"], X)
    assert verify_any(line.scale(b * b), result.certificate, None)
