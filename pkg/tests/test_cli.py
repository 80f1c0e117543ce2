import json
import os

from posmat.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, main
from posmat.selftest import fixture_path


def read(path):
    with open(path) as f:
        return json.load(f)


def write(path, data):
    with open(path, "w") as f:
        json.dump(data, f)
    return path


def test_diag(tmpdir):
    out = os.path.join(str(tmpdir), "diag.json")
    assert main(["diag", fixture_path("hyperbolic.json"), "--out", out]) == EXIT_OK
    data = read(out)
    assert data["b"] == "2"
    assert data["verified"]


def test_verify(tmpdir, capsys):
    instance = fixture_path("id.json")
    assert main(["verify", instance, fixture_path("id_cert.json")]) == EXIT_OK
    assert "PASS" in capsys.readouterr().out
    document = read(fixture_path("id_cert.json"))
    document["certificate"]["terms"] = []
    bad = write(os.path.join(str(tmpdir), "bad_cert.json"), document)
    assert main(["verify", instance, bad]) == EXIT_VERIFICATION
    assert "FAIL" in capsys.readouterr().out


def test_bad_input():
    broken = os.path.join("tests", "data", "broken.json")
    assert main(["diag", broken]) == EXIT_USAGE
    assert main(["diag", os.path.join("tests", "data", "nowhere.json")]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["--version"]) == EXIT_OK


def test_scalarize(capsys):
    assert main(["scalarize", fixture_path("box.json"), "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["scalar_gens"]) == 2


def test_sos_then_verify(tmpdir):
    instance = write(
        os.path.join(str(tmpdir), "square.json"),
        {"instance_version": 1, "id": "square", "vars": ["x"], "target": "x^2 - 2*x + 2"},
    )
    cert = os.path.join(str(tmpdir), "square_cert.json")
    assert main(["sos", instance, "--out", cert]) == EXIT_OK
    assert read(cert)["status"] == "certified"
    assert main(["verify", instance, cert]) == EXIT_OK


def test_compactness(capsys):
    assert main(["compactness", fixture_path("quadrant.json")]) == EXIT_OK
    assert "status: unbounded" in capsys.readouterr().out


def test_analyze_report(tmpdir):
    report = os.path.join(str(tmpdir), "report.json")
    code = main(["analyze", fixture_path("negative_identity.json"), "--no-prescan",
                 "--report", report])
    assert code == EXIT_OK
    data = read(report)
    assert data["applicable"] == []
    assert data["entries"]
