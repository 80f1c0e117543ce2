import pytest
from posmat import GeneratorSet, MPoly, PolyMatrix, SymPolyMatrix, scalarize
from posmat.errors import DimensionError
from posmat.GeneratorSet import preorder_generators, quadratic_form_values
from posmat.sampling import points_in_set, random_points

XY = ("x", "y")


def poly(text, variables=XY):
    return MPoly.from_string(text, variables)


def test_scalarize_box():
    box = SymPolyMatrix([["1 - x^2", "0"], ["0", "1 - y^2"]], XY)
    gens = scalarize([box])
    assert gens.n == 2
    assert gens.scalar_gens == [poly("2 - x^2 - y^2"), poly("(1 - x^2)*(1 - y^2)")]
    assert gens.provenance == [{"matrix": 0, "order": 1}, {"matrix": 0, "order": 2}]


def test_scalarize_is_idempotent_on_scalars():
    g = PolyMatrix([["1 - x^2 - y^2"]], XY)
    assert scalarize([g]).scalar_gens == [poly("1 - x^2 - y^2")]


def test_scalarize_checks_sizes():
    with pytest.raises(DimensionError):
        scalarize([PolyMatrix.identity(1, XY), PolyMatrix.identity(2, XY)])
    with pytest.raises(ValueError):
        scalarize([])
    assert scalarize([], XY, 3).scalar_gens == []


def test_same_set_as_the_matrices():
    G = SymPolyMatrix([["x", "y"], ["y", "1 - x"]], XY)
    gens = scalarize([G])
    for point in random_points(XY, 100, seed=3, scale=1, denominator=4):
        assert gens.matrices_psd_at(point) == gens.contains(point)


def test_generator_indexing():
    gens = GeneratorSet.from_scalars(("x",), ["x", "1 - x"])
    assert gens.generator(0) == 1
    assert gens.generator(2) == poly("1 - x", ("x",))
    assert len(gens) == 2
    assert gens.contains([0]) and not gens.strictly_inside([0])
    assert gens.strictly_inside(["1/2"])
    assert not gens.contains([2])
    lifted = gens.with_n(3)
    assert lifted.n == 3 and lifted.scalar_gens == gens.scalar_gens


def test_preorder_generators():
    gens = GeneratorSet.from_scalars(("x",), ["x", "1 - x"])
    assert quadratic_form_values(gens) == [poly("x", ("x",)), poly("1 - x", ("x",))]
    matrices = preorder_generators(gens, product_cap=2)
    # [x], [1 - x], then x, 1 - x, x^2, x*(1 - x), (1 - x)^2 times I
    assert PolyMatrix([["x*(1 - x)"]], ("x",)) in matrices
    assert len(preorder_generators(gens, product_cap=0)) == 2


@pytest.mark.parametrize(
    "gens",
    [
        GeneratorSet.from_scalars(XY, ["1 - x^2 - y^2", "x"]).with_n(2),
        scalarize([SymPolyMatrix([["1 - x^2", "0"], ["0", "1 - y^2"]], XY)]),
    ],
)
def test_preorder_generators_are_psd_on_the_set(gens):
    points = points_in_set(gens, 15, seed=3)
    assert points
    for G in preorder_generators(gens, product_cap=2):
        for point in points:
            assert G.eval_psd(point) in ("PD", "PSD")


def test_json_round_trip():
    gens = scalarize([SymPolyMatrix([["1 - x^2", "x*y"], ["x*y", "1"]], XY)])
    assert GeneratorSet.from_json(gens.to_json()).to_json() == gens.to_json()


def test_points_in_set():
    disk = GeneratorSet.from_scalars(XY, ["1 - x^2 - y^2"])
    points = points_in_set(disk, 10, seed=0)
    assert len(points) == 10
    assert all(disk.strictly_inside(p) for p in points)
