import json

import pytest

from ghborsuk import delta_simplex, distortion, validate_metric
from ghborsuk.cli import main
from ghborsuk.correspondences import pairs_to_relation
from ghborsuk.io import dumps_json, loads_json


@pytest.fixture
def files(tmp_path):
    def write(name, matrix):
        path = tmp_path / name
        path.write_text(json.dumps({"dist": matrix}))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(files, capsys):
    code, out, _ = run(capsys, "validate", files("p.json", [[0, 1, 2], [1, 0, 1], [2, 1, 0]]))
    assert code == 0 and "valid" in out
    code, _, err = run(capsys, "validate", files("bad.json", [[0, 1, 3], [1, 0, 1], [3, 1, 0]]))
    assert code == 1 and "TriangleViolation" in err


def test_missing_file_and_usage(capsys, tmp_path):
    assert run(capsys, "info", str(tmp_path / "nope.json"))[0] == 1
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["verify", "a1"])
    assert err.value.code == 2


def test_info(files, capsys):
    code, out, _ = run(capsys, "info", "--format", "json", files("s.json", [[0, 1], [1, 0]]))
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 2 and doc["diameter_graph_edges"] == 1


def test_gh_round_trip(files, capsys):
    X = [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    Y = [[0, 1], [1, 0]]
    code, out, _ = run(capsys, "gh", "--format", "json", "--no-shortcuts",
                       files("x.json", X), files("y.json", Y))
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"value", "method", "lower", "upper", "witness"}
    R = pairs_to_relation(doc["witness"], 3, 2)
    assert distortion(validate_metric(X), validate_metric(Y), R) == 2 * doc["value"]
    assert doc["witness"] == sorted(doc["witness"])


def test_gh_delta1(files, capsys):
    code, out, _ = run(capsys, "gh", "--format", "json", files("d.json", [[0]]),
                       files("y.json", [[0, 3], [3, 0]]))
    doc = json.loads(out)
    assert doc["value"] == 1.5 and doc["method"] == "shortcut-Δ1"


def test_gh_too_large_reports_bounds(files, capsys):
    a = files("a.json", delta_simplex(4, 1.0).rows())
    b = files("b.json", [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    code, out, err = run(capsys, "gh", "--format", "json", "--no-shortcuts", "--max-points", "3", a, b)
    doc = json.loads(out)
    assert code == 0 and "TooLarge" in err and doc["value"] is None
    assert (doc["lower"], doc["upper"]) == (0.5, 1.0)


def test_borsuk(files, capsys):
    code, out, _ = run(capsys, "borsuk", "--format", "json", files("s.json", delta_simplex(3).rows()))
    doc = json.loads(out)
    assert code == 0 and doc["beta"] == 3 and set(doc) == {"beta", "witness", "epsilon", "diam"}


def test_delta_and_gen(capsys):
    code, out, _ = run(capsys, "delta", "3", "2.5")
    assert code == 0 and loads_json(out) == delta_simplex(3, 2.5)
    code, out, _ = run(capsys, "gen", "polygon:4")
    assert code == 0 and loads_json(out).n == 4
    code, _, err = run(capsys, "gen", "blob:3")
    assert code == 1 and "InvalidSpec" in err
    code, out, _ = run(capsys, "gen", "--format", "text", "simplex:2:3")
    assert out.splitlines()[1:] == ["0.0,3.0", "3.0,0.0"]


def test_gen_is_reproducible(capsys):
    first = run(capsys, "gen", "synthetic:6", "--seed", "5")[1]
    assert run(capsys, "gen", "synthetic:6", "--seed", "5")[1] == first
    assert run(capsys, "gen", "synthetic:6", "--seed", "6")[1] != first


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "thm4", "--seed", "7", "--trials", "50")
    assert code == 0 and out.startswith("PASS A7") and "50 instances" in out
    assert run(capsys, "verify", "nonsense", "--seed", "1")[0] == 2
    a = run(capsys, "verify", "a2", "a10", "--seed", "4", "--format", "json")[1]
    b = run(capsys, "verify", "a2", "a10", "--seed", "4", "--format", "json", "--workers", "4")[1]
    assert a == b
