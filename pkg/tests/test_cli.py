import json
import subprocess
import sys

import pytest

from nilhecke import cases
from nilhecke.cli import main
from nilhecke.forms import dumps


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pair_braden_d4(capsys):
    code, out, _ = run(capsys, "pair", "D4", "s u v t s u v", "0110100", "1010010")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == "-1"
    assert data["x"] == "s u v"
    assert data["defects"] == [0, 0]


def test_pair_empty_word(capsys):
    code, out, _ = run(capsys, "pair", "A2", "", "", "")
    assert code == 0
    assert json.loads(out)["value"] == "1"


def test_pair_text_and_oracle(capsys):
    code, out, _ = run(capsys, "pair", "B2", "s,t,s", "001", "001", "--oracle", "--format", "text")
    assert code == 0
    assert out.splitlines() == ["a_s*a_t", "oracle a_s*a_t PASS"]


def test_oracle_bound_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("NILHECKE_ORACLE_BOUND", "2")
    code, _, err = run(capsys, "pair", "A2", "1 2 1", "100", "100", "--oracle")
    assert code == 2
    assert json.loads(err)["error"] == "OracleBoundExceeded"


def test_demazure(capsys):
    code, out, _ = run(capsys, "demazure", "G2", "s t s t s t s t")
    assert code == 0
    data = json.loads(out)
    assert data["length"] == 6
    assert data["demazure_product"] == "s t s t s t"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "A2", "1 2 1 1", "1", "--no-d1")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == len(data["subexpressions"])
    for row in data["subexpressions"]:
        assert "D1" not in row["decorations"]
    code, out, _ = run(capsys, "enumerate", "A2", "1 2 1 1", "1", "--defect", "0")
    assert all(r["defect"] == 0 for r in json.loads(out)["subexpressions"])


def test_gram_round_trip(capsys):
    code, out, _ = run(capsys, "gram", "D4", "s u v t s u v", "s u v", "--defect", "0")
    assert code == 0
    data = json.loads(out)
    assert dumps(data) == out
    assert data["determinant"] == -2
    assert data["elementary_divisors"] == [1, 1, 2]
    assert data["torsion_primes"] == [2]


def test_gram_jobs_deterministic(capsys):
    _, serial, _ = run(capsys, "gram", "A3", "1 2 1 3 2 1", "1 2", "--max-defect", "2")
    _, parallel, _ = run(capsys, "gram", "A3", "1 2 1 3 2 1", "1 2", "--max-defect", "2", "--jobs", "2")
    assert serial == parallel


def test_deodhar(capsys):
    code, out, _ = run(capsys, "deodhar", "B2", "s t s s t")
    assert code == 0
    assert json.loads(out)["status"] == "PASS"


def test_examples_braden_d4(capsys):
    code, out, _ = run(capsys, "examples", "braden-d4")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "PASS"
    checks = {c["check"]: c["actual"] for c in data["examples"][0]["checks"]}
    assert checks["determinant"] == -2
    assert checks["elementary divisors"] == [1, 1, 2]
    assert checks["torsion primes"] == [2]


def test_examples_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(cases.BRADEN_D4, "determinant", 2)
    code, out, _ = run(capsys, "examples", "braden-d4")
    assert code == 1
    assert json.loads(out)["status"] == "FAIL"


def test_systems(capsys):
    code, out, _ = run(capsys, "systems")
    names = json.loads(out)["systems"]
    for n in ["A1", "A11", "B2", "G2", "D4", "affineA1"]:
        assert n in names


def test_system_file(capsys, tmp_path):
    path = tmp_path / "i2.json"
    path.write_text(json.dumps({"name": "I2(5)", "generators": ["p", "q"], "cartan": [[2, -1], [-1, 2]],
                                "coxeter_matrix": [[1, 3], [3, 1]]}))
    code, out, _ = run(capsys, "demazure", str(path), "p q p q")
    assert code == 0
    assert json.loads(out)["length"] == 3


@pytest.mark.parametrize(
    "argv, error",
    [
        (["pair", "A2", "1 2", "1", "11"], "LengthMismatch"),
        (["pair", "A2", "1 2", "1x", "11"], "InputError"),
        (["pair", "A2", "1 3", "10", "10"], "BadGeneratorIndex"),
        (["pair", "A2", "1 2", "10", "01"], "EndpointMismatch"),
        (["demazure", "Z9", "1"], "InputError"),
        (["examples", "nope"], "InputError"),
    ],
)
def test_input_errors(capsys, argv, error):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    payload = json.loads(err)
    assert payload["error"] == error
    assert payload["detail"]


def test_bad_system_files(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"generators": ["a", "b"], "cartan": [[2, 1], [1, 2]]}')
    code, _, err = run(capsys, "demazure", str(bad), "a")
    assert code == 2 and json.loads(err)["error"] == "PositiveOffDiagonal"
    bad.write_text('{"generators": ["a", "b"], "cartan": [[2, -1], [-1, 2]], "coxeter_matrix": [[1, 4], [4, 1]]}')
    code, _, err = run(capsys, "demazure", str(bad), "a")
    assert code == 2 and json.loads(err)["error"] == "OrderMismatch"
    bad.write_text("not json")
    code, _, err = run(capsys, "demazure", str(bad), "a")
    assert code == 2 and json.loads(err)["error"] == "InputError"


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "nilhecke", "pair", "A2"], capture_output=True, text=True)
    assert proc.returncode == 2
    assert json.loads(proc.stderr)["error"] == "usage"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nilhecke", "pair", "A2", "1 2 1", "100", "001"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "a_2"
