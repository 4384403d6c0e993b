import json
import subprocess
import sys

import pytest

from pfq.cli import run


def call(capsys, *argv):
    rc = run(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_compute(capsys):
    rc, out, _ = call(capsys, "compute", "--seq", "monomial", "--partition", "1", "--vars", "2")
    assert rc == 0
    assert json.loads(out) == {"vars": ["x1", "x2"], "terms": [[[1, 0], "1/1"], [[0, 1], "1/1"]]}


def test_compute_too_long_is_zero(capsys):
    rc, out, _ = call(capsys, "compute", "--partition", "2,1", "--vars", "1")
    assert rc == 0 and json.loads(out) == {"vars": ["x1"], "terms": []}


@pytest.mark.parametrize("route", ["nimmo", "hl", "schur"])
def test_routes_print_the_same_json(capsys, route):
    rc, out, _ = call(capsys, "compute", "--seq", "typeB", "--partition", "3,1", "--vars", "3",
                      "--route", route)
    assert rc == 0
    ref = run(["compute", "--seq", "typeB", "--partition", "3,1", "--vars", "3"])
    assert ref == 0 and capsys.readouterr().out == out


def test_render(capsys):
    rc, out, _ = call(capsys, "compute", "--partition", "1", "--vars", "1", "--render")
    assert json.loads(out)["render"]


def test_dual(capsys):
    rc, out, _ = call(capsys, "dual", "--partition", "1", "--vars", "1", "--order", "2")
    assert rc == 0
    assert json.loads(out)["terms"] == [[[1], "2/1"]]


def test_skew_aliases(capsys):
    _, a, _ = call(capsys, "skew", "--seq", "factorial:symbolic", "--lambda", "3,1", "--mu", "1", "--vars", "2")
    _, b, _ = call(capsys, "skew", "--seq", "factorial:symbolic", "--outer", "3,1", "--inner", "1", "--vars", "2")
    assert a == b and json.loads(a)["terms"]


def test_pieri_example(capsys):
    rc, out, _ = call(capsys, "pieri", "--seq", "factorial:symbolic", "--mu", "6,5,4,2,1",
                      "--lambda", "8,6,4,3,2", "--parity", "even", "--order", "5")
    assert rc == 0
    data = json.loads(out)
    assert data["order"] == 5
    assert data["coeffs"] == ["0/1"] * 5 + ["4/1"]


def test_pieri_expand(capsys):
    rc, out, _ = call(capsys, "pieri-expand", "--mu", "2,1", "--r", "2", "--vars", "5")
    assert rc == 0
    assert json.loads(out)["coefficients"] == [[[3, 2], "2/1"], [[4, 1], "2/1"]]


def test_bcd(capsys):
    rc, out, _ = call(capsys, "bcd", "--type", "D", "--partition", "2", "--vars", "1", "--form", "u")
    assert rc == 0
    assert json.loads(out)["value"]["terms"] == [[[2], "2/1"], [[0], "-4/1"]]


def test_list_suites(capsys):
    rc, out, _ = call(capsys, "list-suites")
    names = [s["name"] for s in json.loads(out)]
    assert rc == 0 and "pieri-cross" in names and "positivity" in names


def test_verify_is_deterministic(capsys):
    _, a, _ = call(capsys, "verify", "cauchy")
    _, b, _ = call(capsys, "verify", "cauchy")
    assert a == b
    assert json.loads(a)["ok"] is True


def test_verify_timings(capsys):
    rc, out, _ = call(capsys, "verify", "positivity", "--timings")
    assert rc == 0 and "seconds" in json.loads(out)["reports"][0]


@pytest.mark.parametrize("argv", [
    [],
    ["verify", "no-such-suite"],
    ["compute", "--partition", "2,2", "--vars", "2"],
    ["compute", "--partition", "1"],
    ["compute", "--seq", "bogus", "--partition", "1", "--vars", "1"],
    ["pieri", "--mu", "1", "--lambda", "2", "--parity", "maybe"],
    ["bcd", "--type", "C", "--partition", "2,1", "--vars", "1"],
])
def test_usage_errors(capsys, argv):
    rc, out, err = call(capsys, *argv)
    assert rc == 2 and not out
    assert "error" in json.loads(err)


def test_order_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PFQ_DEFAULT_ORDER", "3")
    rc, out, _ = call(capsys, "pieri", "--mu", "1", "--lambda", "2")
    assert rc == 0 and json.loads(out)["order"] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pfq.cli", "list-suites"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)
