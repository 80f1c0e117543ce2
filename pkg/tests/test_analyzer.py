from fractions import Fraction

import pytest
from posmat import GeneratorSet, MPoly, PolyMatrix, SearchBudget
from posmat.analyzer import (
    COMPACT,
    REFUTED,
    UNBOUNDED,
    USER_ATTESTED,
    VERIFIED,
    bhc_check,
    compactness_probe,
    find_unbounded_ray,
    full_report,
    hessian_at,
    matrix_zero_analysis,
    nonnegative_beyond,
    prescan_zeros,
    quadratic_form,
    schweighofer_record,
    zero_analysis,
)
from posmat.errors import DimensionError
from posmat.selftest import load_fixture

X, XY = ("x",), ("x", "y")


def poly(text, variables=XY):
    return MPoly.from_string(text, variables)


def disk():
    return GeneratorSet.from_scalars(XY, ["1 - x^2 - y^2"])


def unit_interval():
    return GeneratorSet.from_scalars(X, ["x", "1 - x"])


def test_zero_analysis_on_the_disk():
    f = poly("x^2 + y^2")
    center, edge = zero_analysis(f, disk(), [[0, 0], [1, 0]])
    assert center.is_zero and center.in_K and center.interior
    assert center.hessian == [[2, 0], [0, 2]]
    assert center.hessian_class == "PD" and center.hessian_condition
    assert not edge.is_zero and edge.in_K and not edge.interior
    assert hessian_at(poly("x*y"), [0, 0]) == [[0, 1], [1, 0]]


def test_matrix_zero_analysis():
    F = PolyMatrix([["x^2 + y^2", "0"], ["0", "1"]], XY)
    first, second = matrix_zero_analysis(F, disk(), candidates=[[0, 0]])
    assert first.polynomial == poly("x^2 + y^2")
    assert [r.point.coords for r in first.zeros_in_K()] == [(0, 0)]
    assert second.zeros_in_K() == []
    assert quadratic_form(F, [1, 1]) == poly("x^2 + y^2 + 1")
    with pytest.raises(DimensionError):
        quadratic_form(F, [1])
    with pytest.raises(ValueError):
        matrix_zero_analysis(F, disk(), directions=[[0, 0]])
    degenerate = PolyMatrix([["1", "1"], ["1", "1"]], XY)
    (analysis,) = matrix_zero_analysis(degenerate, disk(), directions=[[1, -1]])
    assert analysis.degenerate


def test_boundary_hessian_conditions():
    x = MPoly.variable(X, 0)
    record = bhc_check(x, unit_interval(), [0], uniformizers=[1])
    assert record.verdict
    assert record.k == 1 and record.coefficients == [1]
    refused = bhc_check(x * x, unit_interval(), [0], uniformizers=[1])
    assert not refused.verdict
    assert refused.reasons
    interior = bhc_check(poly("(x - 1/2)^2", X), unit_interval(), ["1/2"], k=0)
    assert interior.verdict
    with pytest.raises(ValueError):
        bhc_check(x, unit_interval(), [2], uniformizers=[1])
    with pytest.raises(ValueError):
        bhc_check(x, unit_interval(), [0], uniformizers=[2])


def test_nonnegative_beyond():
    t = MPoly.variable(("t",), 0)
    assert nonnegative_beyond((t - 3) * (t + 1)) == 3
    assert nonnegative_beyond(t.scale(-1)) is None
    assert nonnegative_beyond(t * t + 1) == 0


def test_compactness():
    budget = SearchBudget(max_sos_degree=2)
    result = compactness_probe(disk(), budget)
    assert result.status == COMPACT and result.r == 1
    quadrant = GeneratorSet.from_scalars(XY, ["x", "y"])
    result = compactness_probe(quadrant, budget)
    assert result.status == UNBOUNDED
    for t in range(20):
        assert quadrant.contains(result.ray.point(t))
    assert find_unbounded_ray(disk()) is None


def test_univariate_module_is_archimedean():
    result = compactness_probe(unit_interval(), SearchBudget(max_sos_degree=4))
    assert result.status == COMPACT
    assert result.module_witness is not None
    assert result.notes


def test_prescan_is_advisory():
    points = prescan_zeros(poly("x - 1/2"), disk(), starts=5)
    assert any(p.coords == (Fraction(1, 2), 0) for p in points)


def test_schweighofer_on_the_disk():
    entry = schweighofer_record(poly("1 + x^2"), disk(), budget=SearchBudget(max_sos_degree=2))
    assert entry.applicable
    statuses = {h.name: h.status for h in entry.hypotheses}
    assert statuses["F is positive definite on K"] == VERIFIED
    assert statuses["F is bounded on K"] == VERIFIED


def test_schweighofer_with_attested_values():
    quadrant = GeneratorSet.from_scalars(XY, ["x", "y"])
    entry = schweighofer_record(poly("1 + x"), quadrant, attested_asymptotics=["0"],
                                budget=SearchBudget(max_sos_degree=2))
    assert entry.refuted
    name = "asymptotic values of every x^T F x on K form a finite subset of R_+"
    assert {h.name: h.status for h in entry.hypotheses}[name] == REFUTED


def test_hessian_routes_on_the_disk():
    instance = load_fixture("disk_scalar.json")
    report = full_report(
        instance.target_matrix,
        instance.generator_set,
        budget=SearchBudget(max_sos_degree=2),
        candidates=instance.candidates,
        prescan=False,
    )
    routes = report.applicable_routes()
    assert "hessian_preorder" in routes and "hessian_module" in routes
    entry = report.entry("hessian_module")
    statuses = [h.status for h in entry.hypotheses]
    assert statuses.count(USER_ATTESTED) == 1
    assert report.entry("krivine_stengle_strict").refuted
    assert report.to_json()["applicable"] == routes
    assert "hessian_module: applicable" in report.to_text()


def test_negative_identity_gets_no_conclusion():
    instance = load_fixture("negative_identity.json")
    report = full_report(instance.target_matrix, instance.generator_set, prescan=False)
    assert report.applicable_routes() == []
    assert report.entry("global_psd_denominator").refuted
