import json
import shutil

import pytest

from cubicmaps.cli import main
from cubicmaps.fixtures import fixture_path, theta_map
from cubicmaps.serialize import canonical_json, load_map, map_to_document

from conftest import random_insertion_walk


@pytest.fixture
def cube_file(tmp_path):
    path = tmp_path / "cube.json"
    shutil.copy(fixture_path("cube.json"), path)
    return str(path)


@pytest.fixture
def theta_file(tmp_path):
    path = tmp_path / "theta.json"
    shutil.copy(fixture_path("theta.json"), path)
    return str(path)


def test_validate_ok(cube_file, capsys):
    assert main(["validate", "--input", cube_file]) == 0
    assert "map is valid" in capsys.readouterr().out


def test_validate_corrupted(tmp_path, cube_file, capsys):
    doc = json.load(open(cube_file))
    doc["vertex_edge"][0][0] = 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["validate", "--input", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "vertex row 1" in out and "edge column 1" in out


def test_validate_missing_file(tmp_path, capsys):
    assert main(["validate", "--input", str(tmp_path / "nope.json")]) == 2


def test_validate_unparseable(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["validate", "--input", str(bad)]) == 2


def test_enumerate_cube(cube_file, capsys, tmp_path):
    out = tmp_path / "enum.json"
    assert main(["enumerate", "--input", cube_file, "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    assert "9 cycle covers, 6 Hamiltonian, 4 labellings" in printed
    doc = json.loads(out.read_text())
    assert len(doc["covers"]) == 9
    assert len(doc["hamiltonian"]) == 6
    assert len(doc["labellings"]) == 4


def test_enumerate_theta(theta_file, capsys):
    assert main(["enumerate", "--input", theta_file]) == 0
    assert "3 cycle covers, 3 Hamiltonian, 1 labellings" in capsys.readouterr().out


def test_enumerate_requires_cycles(tmp_path):
    doc = map_to_document(theta_map())
    path = tmp_path / "bare.json"
    path.write_text(canonical_json(doc))
    assert main(["enumerate", "--input", str(path)]) == 2


def test_grow_writes_trace(cube_file, tmp_path, capsys):
    trace = tmp_path / "trace.jsonl"
    rc = main(
        ["grow", "--input", cube_file, "--iterations", "4", "--seed", "11",
         "--trace", str(trace)]
    )
    assert rc == 0
    lines = trace.read_text().splitlines()
    assert len(lines) == 5
    last = json.loads(lines[-1])
    assert len(last["map"]["vertex_edge"]) == 16
    assert "step 4:" in capsys.readouterr().out


def test_grow_zero_iterations(theta_file, tmp_path):
    trace = tmp_path / "t.jsonl"
    assert main(["grow", "--input", theta_file, "--trace", str(trace)]) == 0
    assert len(trace.read_text().splitlines()) == 1


def test_grow_traces_are_byte_identical(theta_file, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        assert main(
            ["grow", "--input", theta_file, "--iterations", "6", "--seed", "5",
             "--trace", str(path)]
        ) == 0
    assert a.read_bytes() == b.read_bytes()


def test_check_holds_on_cube(cube_file, capsys):
    assert main(["check", "--input", cube_file]) == 0
    out = capsys.readouterr().out
    assert "conjecture 1: holds" in out
    assert "conjecture 2: holds" in out


def test_check_refutes_on_counterexample(tmp_path, capsys):
    path = tmp_path / "ce.json"
    shutil.copy(fixture_path("two_kempe_classes.json"), path)
    witness = tmp_path / "w.json"
    assert main(["check", "--input", str(path), "--out", str(witness)]) == 1
    assert "conjecture 1: refuted" in capsys.readouterr().out
    reports = json.loads(witness.read_text())
    assert reports[0]["witness"]["missing_from_closure"]


def test_check_planted_covers_refute_conjecture_two(theta_file, tmp_path, capsys):
    covers = tmp_path / "covers.json"
    shutil.copy(fixture_path("theta_planted_covers.json"), covers)
    witness = tmp_path / "w.json"
    rc = main(
        ["check", "--input", theta_file, "--covers", str(covers),
         "--out", str(witness)]
    )
    assert rc == 1
    assert "conjecture 2: refuted" in capsys.readouterr().out
    assert witness.exists()


def test_check_cap_exceeded(tmp_path):
    import random

    m, _ = random_insertion_walk(theta_map(), 20, random.Random(1))  # 63 edges
    doc = map_to_document(m, cycles=None)
    doc["cycles"] = [[1, 2]]  # any cycles field; cap triggers before use
    path = tmp_path / "big.json"
    path.write_text(canonical_json(doc))
    assert main(["check", "--input", str(path)]) == 4


def test_check_cap_env_override(tmp_path, monkeypatch, theta_file):
    monkeypatch.setenv("CCG_ORACLE_CAP", "2")
    assert main(["check", "--input", theta_file]) == 4
    monkeypatch.setenv("CCG_ORACLE_CAP", "45")
    assert main(["check", "--input", theta_file]) == 0


def test_export_json_round_trip(cube_file, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["export", "--input", cube_file, "--format", "json", "--out", str(out1)]) == 0
    assert main(["export", "--input", str(out1), "--format", "json", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    m, cycles = load_map(out1)
    assert (m.n_vertices, m.n_edges) == (8, 12)
    assert cycles == ((1, 9, 10, 11), (3, 4, 5, 6))


def test_export_dot(theta_file, capsys):
    assert main(["export", "--input", theta_file, "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.count("v1 -- v2") == 3
    assert "class=" in dot  # labelling derived from the seed cover
