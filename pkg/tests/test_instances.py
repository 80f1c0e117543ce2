import os

import pytest
from posmat import InstanceTranslator, MPoly, SymPolyMatrix
from posmat.errors import ParseError, SchemaError
from posmat.selftest import fixture_path

data_dir = os.path.join("tests", "data")


def test_disk_fixture():
    instance = InstanceTranslator().translate_instance(fixture_path("disk.json"))
    assert instance.identifier == "disk"
    assert instance.vars == ("x", "y")
    assert instance.n == 2
    assert isinstance(instance.target, SymPolyMatrix)
    assert [p.to_json() for p in instance.candidates] == [["0", "0"]]
    budget = instance.budget(seed=5)
    assert (budget.max_sos_degree, budget.max_product_order, budget.seed) == (4, 2, 5)


def test_polynomial_target():
    instance = InstanceTranslator().translate_instance(fixture_path("quadrant.json"))
    assert instance.target_scalar == MPoly.variable(("x", "y"), "x")
    assert instance.target_matrix.n == 1
    assert len(instance.generator_set) == 2


def test_scalar_override_and_unknown_options(caplog):
    path = os.path.join(data_dir, "scalar_override.json")
    instance = InstanceTranslator().translate_instance(path)
    assert [str(g) for g in instance.generator_set.scalar_gens] == [
        "-x^2 + 1",
        "-y^2 + 1",
    ]
    assert instance.options == {"max_sos_degree": 2}
    assert "colour" in caplog.text
    with pytest.raises(ParseError):
        instance.target_scalar


def test_environment_ceiling(monkeypatch):
    monkeypatch.setenv("POSMAT_MAX_DEGREE", "2")
    instance = InstanceTranslator().translate_instance(fixture_path("disk.json"))
    assert instance.budget().max_sos_degree == 2
    assert instance.budget(max_sos_degree=8).max_sos_degree == 2


def test_bad_files():
    translator = InstanceTranslator()
    with pytest.raises(SchemaError):
        translator.translate_instance(os.path.join(data_dir, "bad_version.json"))
    with pytest.raises(ParseError):
        translator.translate_instance(os.path.join(data_dir, "broken.json"))
    with pytest.raises(SchemaError):
        translator.translate_instance({"instance_version": 1, "vars": "x"})


def test_points_and_attestations():
    translator = InstanceTranslator()
    points = translator.translate_points(
        os.path.join(data_dir, "interval_candidates.json"), ("x",)
    )
    assert [p.coords for p in points] == [(0,), (1,)]
    claims = translator.translate_attestations(
        os.path.join(data_dir, "interval_attestations.json")
    )
    assert claims["uniformizers"][0]["k"] == 1


class DotPowerTranslator(InstanceTranslator):
    """Accepts targets written with ``**`` only."""

    def compute_target(self, data, variables):
        if "**" not in str(data.get("target")):
            raise ParseError("powers must use **")
        return InstanceTranslator.compute_target(self, data, variables)


def test_translator_customization():
    data = {"instance_version": 1, "vars": ["x"], "target": "x**2"}
    instance = DotPowerTranslator().translate_instance(data)
    assert instance.target == MPoly.from_string("x^2", ("x",))
    with pytest.raises(ParseError):
        DotPowerTranslator().translate_instance(dict(data, target="x^2"))
