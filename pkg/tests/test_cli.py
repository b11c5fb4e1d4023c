from __future__ import annotations

import json
import subprocess
import sys

import pytest

from triangle_forge.cli import INJECT_FAILURE_ENV, main, render_triangle
from triangle_forge.config import ENV_CAP
from triangle_forge.constructions import TriangleId
from triangle_forge.engine import Triangle


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_triangle_plain(capsys):
    code, out, _ = run(capsys, "triangle", "thm-1-1", "-r", "3")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [["1"], ["2", "6"], ["16", "48", "72"]]
    assert out.endswith("\n")


def test_triangle_plain_is_right_justified(capsys):
    _, out, _ = run(capsys, "triangle", "pascal", "-r", "6")
    lines = out.splitlines()
    assert lines[-1] == "1 5 10 10 5 1"
    assert lines[2] == "1 2  1"


def test_triangle_json(capsys):
    code, out, _ = run(capsys, "triangle", "catalan-ex5", "-r", "1", "-f", "json")
    assert code == 0
    assert out == '{"name":"catalan-ex5","ring":"rational","rows":[["1"]]}\n'


def test_triangle_csv(capsys):
    _, out, _ = run(capsys, "triangle", "entringer-5-4", "-r", "6", "--format", "csv")
    assert out.splitlines()[-1] == "16,32,46,56,61,61"


@pytest.mark.parametrize("name", [t.value for t in TriangleId])
def test_triangle_json_round_trip(capsys, name):
    code, out, _ = run(capsys, "triangle", name, "-r", "6", "-f", "json")
    assert code == 0
    again = render_triangle(Triangle.from_json(out), "json")
    assert again == out


def test_polynomial_triangle_json_shape(capsys):
    _, out, _ = run(capsys, "triangle", "thm-3-2", "-r", "2", "-f", "json")
    rows = json.loads(out)["rows"]
    assert rows[1][0] == ["0", "1"]
    assert rows[1][1] == {"low": -1, "coeffs": ["1"]}


def test_seq_outputs(capsys):
    assert run(capsys, "seq", "motzkin", "-c", "6")[1] == "1 1 2 4 9 21\n"
    assert "6,1/42" in run(capsys, "seq", "bernoulli", "-c", "7", "-f", "csv")[1].splitlines()
    assert run(capsys, "seq", "zeta-coeff", "--count", "4")[1] == "1/6 1/90 1/945 1/9450\n"
    data = json.loads(run(capsys, "seq", "tangent", "-c", "3", "-f", "json")[1])
    assert data == [{"index": 1, "value": "1"}, {"index": 2, "value": "2"}, {"index": 3, "value": "16"}]


def test_verify_plain_passes(capsys):
    code, out, _ = run(capsys, "verify", "-d", "1")
    assert code == 0
    assert "FAIL" not in out


def test_verify_json_is_array(capsys):
    code, out, _ = run(capsys, "verify", "--depth", "2", "-f", "json")
    assert code == 0
    records = json.loads(out)
    assert isinstance(records, list) and all(r["passed"] for r in records)


def test_verify_csv_header(capsys):
    _, out, _ = run(capsys, "verify", "-f", "csv")
    assert out.splitlines()[0] == "name,parameters,expected,actual,passed,elapsed"


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setenv(INJECT_FAILURE_ENV, "1")
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL" in out and "injected failure" in out


@pytest.mark.parametrize(
    "argv, want",
    [
        (["oracle", "phi", "2,1,4,5,3"], "(1,-1,0,0)"),
        (["oracle", "phi", "(2,1)"], "(0)"),
        (["oracle", "nu", "(0,0)"], "4"),
        (["oracle", "nu", "U F D", "--brute"], "8"),
        (["oracle", "rho", "(1,-1)"], "42"),
        (["oracle", "beta", "5"], "16"),
        (["oracle", "entringer", "6", "2"], "32"),
    ],
)
def test_oracle(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == want + "\n"


def test_mc(capsys):
    code, out, _ = run(capsys, "mc", "3", "--samples", "20000", "--seed", "4", "-f", "json")
    assert code == 0
    data = json.loads(out)
    assert data["exact"] == "1/15" and data["samples"] == 20000 and abs(data["z"]) < 5
    again = json.loads(run(capsys, "mc", "3", "--samples", "20000", "--seed", "4", "--workers", "3", "-f", "json")[1])
    assert again == data


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["triangle", "nope", "-r", "3"],
        ["triangle", "pascal", "-r", "x"],
        ["triangle", "pascal", "-r", "-1"],
        ["triangle", "pascal", "-r", "500"],
        ["seq", "nope"],
        ["seq", "motzkin", "-c", "-2"],
        ["verify", "-d", "7"],
        ["oracle", "phi", "1,1,2"],
        ["oracle", "phi", "1"],
        ["oracle", "phi", "a,b"],
        ["oracle", "nu", "(2,0)"],
        ["oracle", "nu", "(0,0,0,0,0,0,0,0,0)", "--brute"],
        ["oracle", "rho", "U Q"],
        ["mc", "1", "--samples", "1000"],
        ["mc", "3", "--samples", "5"],
        ["oracle", "entringer", "12", "3"],
        ["--bogus"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_cap_flag_and_env(capsys, monkeypatch):
    # a cap below the suite's path lengths turns the enumeration checks into failures
    monkeypatch.setenv(ENV_CAP, "3")
    code, out, _ = run(capsys, "verify")
    assert code == 1 and "enumeration too large" in out
    assert run(capsys, "--cap", "16", "verify")[0] == 0  # flag wins over env
    monkeypatch.delenv(ENV_CAP)
    assert run(capsys, "--cap", "3", "verify")[0] == 1
    assert run(capsys, "verify")[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "triangle_forge", "seq", "catalan", "-c", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "1 1 2 5 14\n"
