from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cuntzcar.cli import EXIT_BOUND, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from cuntzcar.parser import parse_expression
from cuntzcar.serialize import element_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "s1")
    assert code == EXIT_OK
    assert json.loads(out) == {"1": "s1 s1*"}


def test_eq(capsys):
    assert run(capsys, "eq", "s1* s1", "I")[:2] == (EXIT_OK, "true\n")
    assert run(capsys, "eq", "s1", "s2")[:2] == (EXIT_FAIL, "false\n")
    code, out, _ = run(capsys, "--json", "eq", "s1 s1* + s2 s2*", "I")
    assert json.loads(out) == {"equal": True}


def test_check_car(capsys):
    code, out, _ = run(capsys, "check", "car", "4")
    assert code == EXIT_OK
    assert "ALL PASS" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "--json", "check", "cuntz")
    data = json.loads(out)
    assert code == EXIT_OK and data["passed"] and data["reports"][0]["failures"] == []


def test_normalize_and_json_element(capsys):
    code, out, _ = run(capsys, "normalize", "s1 s1* + s2 s2*")
    assert out.strip() == "I"
    code, out, _ = run(capsys, "--json", "normalize", "s1", "--level", "1")
    data = json.loads(out)
    assert data["expression"] == "s1 s1 s1* + s1 s2 s2*"
    assert element_from_json(data["element"]) == parse_expression(data["expression"])


def test_apply_grade_car(capsys):
    assert run(capsys, "apply", "zeta", "I")[1].strip() == "s1 s1* - s2 s2*"
    assert run(capsys, "apply", "delta-star", "s1 s2*")[1].strip() == "0"
    out = run(capsys, "--json", "grade", "I + s1")[1]
    assert json.loads(out) == {"0": "I", "1": "s1"}
    out = run(capsys, "car", "2")[1]
    assert out.strip() == "s1 s1 s2* s1* - s2 s1 s2* s2*"


def test_matrix_and_norm(capsys):
    code, out, _ = run(capsys, "--json", "matrix", "s1 s2*", "--level", "1")
    assert json.loads(out)["rows"] == [["0", "1"], ["0", "0"]]
    code, out, _ = run(capsys, "--json", "norm", "s1 + s2", "--lower-bound-depth", "8")
    assert json.loads(out)["lower_bound"] == pytest.approx(2 ** 0.5)
    code, out, _ = run(capsys, "--json", "norm", "s1 s2* + s2 s1*")
    assert json.loads(out)["norm"] == pytest.approx(1.0)


def test_usage_errors(capsys):
    assert run(capsys, "normalize", "s1 +")[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys, "matrix", "s1", "--level", "2")[0] == EXIT_USAGE  # not gauge invariant
    assert run(capsys, "check", "cuntz", "3")[0] == EXIT_USAGE


def test_resource_bounds_are_distinct(capsys):
    code, _, err = run(capsys, "car", "20")
    assert code == EXIT_BOUND and "bound" in err
    assert run(capsys, "car", "13")[0] == EXIT_BOUND
    assert run(capsys, "--max-car-index", "13", "car", "13")[0] == EXIT_OK
    assert run(capsys, "--max-level", "2", "matrix", "I", "--level", "3")[0] == EXIT_BOUND
    assert run(capsys, "norm", "s1", "--lower-bound-depth", "13")[0] == EXIT_BOUND


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("max_car_index = 2\n")
    assert run(capsys, "--config", str(cfg), "car", "3")[0] == EXIT_BOUND


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cuntzcar", "eq", "s1* s1", "I"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "true"


@pytest.mark.parametrize("suite", ["transfer", "covariance", "crossed-roundtrip", "matrix"])
def test_seeded_checks_deterministic(capsys, suite):
    first = run(capsys, "--json", "check", suite, "--seed", "3")
    second = run(capsys, "--json", "check", suite, "--seed", "3")
    assert first == second
    assert first[0] == EXIT_OK
