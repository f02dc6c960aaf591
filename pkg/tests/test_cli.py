import json
import subprocess
import sys
from fractions import Fraction

import pytest

from madhava.cli import main
from madhava.report import PRINTED_TABLE, significant_prefix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, first_line",
    [
        (["--method", "series-c", "--n", "2", "--digits", "13"], "3.1414634146341"),
        (["--method", "corrected", "--n", "1", "--cf-order", "1", "--digits", "1"], "3.0"),
        (["--method", "brouncker", "--n", "2", "--digits", "1"], "3.2"),
        (["--method", "raw", "--n", "2", "--digits", "4"], "2.6666"),
        (["--method", "aitken", "--n", "3", "--digits", "5"], "3.16666"),
        (["--method", "series-a", "--n", "1", "--digits", "5", "--rounding", "half-even"], "3.16667"),
    ],
)
def test_compute_examples(capsys, argv, first_line):
    code, out, _ = run(capsys, "compute", *argv)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == first_line
    assert lines[1].startswith("abs error <= ")


def test_compute_every_method(capsys):
    for method in ("raw", "corrected", "series-a", "series-b", "series-c", "aitken", "aitken-iter",
                   "brouncker", "averaged"):
        code, out, _ = run(capsys, "compute", "--method", method, "--n", "9", "--format", "json")
        assert code == 0, method
        doc = json.loads(out)
        assert doc["method"] == method
        value = Fraction(int(doc["value"]["num"]), int(doc["value"]["den"]))
        assert doc["decimal"].startswith("3.")
        assert abs(value - Fraction(doc["decimal"])) < Fraction(1, 10**13)


def test_compute_json_error_bound_is_certified(capsys, pi_ref):
    code, out, _ = run(capsys, "compute", "--method", "series-b", "--n", "10", "--format", "json")
    doc = json.loads(out)
    value = Fraction(int(doc["value"]["num"]), int(doc["value"]["den"]))
    bound = Fraction(int(doc["abs_error_bound"]["num"]), int(doc["abs_error_bound"]["den"]))
    assert abs(value - pi_ref).upper <= bound
    assert float(doc["abs_error_bound_sci"]) >= float(bound)
    assert doc["correct_digits"] == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--method", "raw", "--n", "3", "--cf-order", "2"],
        ["compute", "--method", "series-a", "--n", "3", "--rounds", "2"],
        ["compute", "--method", "aitken", "--n", "2"],
        ["compute", "--method", "aitken-iter", "--n", "4", "--rounds", "2"],
        ["compute", "--method", "averaged", "--n", "1"],
        ["compute", "--method", "averaged", "--n", "5", "--of", "nonsense"],
        ["compute", "--method", "nope", "--n", "3"],
        ["compute", "--method", "raw", "--n", "0"],
        ["table", "--rows", "0,2"],
        ["table", "--rows", "a,b"],
        ["verify", "--suite", "everything"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_undefined_transform_exit_3(capsys, monkeypatch):
    from madhava import cli

    monkeypatch.setattr(cli, "_ml", lambda n: Fraction(1))
    code, _, err = run(capsys, "compute", "--method", "aitken", "--n", "5")
    assert code == 3
    assert "zero second difference" in err


def test_table_default_rows(capsys):
    code, out, _ = run(capsys, "table", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,a_n,b_n,c_n"
    rows = {int(l.split(",")[0]): l.split(",")[1:] for l in lines[1:]}
    assert sorted(rows) == [2, 3, 4, 5, 10, 11, 20, 21, 40, 41, 70, 71]
    assert rows[71][2] == "3.1415926535898"
    assert rows[2][2] == "3.1414634146341"
    # printed 3.1415902423789 carries a float artifact from the 11th decimal on
    assert rows[10][1] == "3.1415902423707"
    assert significant_prefix(rows[10][1], 10) == significant_prefix(PRINTED_TABLE[10][1], 10)


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "--rows", "1", "--digits", "5", "--format", "csv")
    assert out.splitlines()[1].split(",")[1] == "3.16666"


def test_table_markdown_layout(capsys):
    code, out, _ = run(capsys, "table", "--rows", "2,3")
    lines = out.splitlines()
    assert lines[0] == "| n | a_n | b_n | c_n |"
    assert lines[1] == "|---|---|---|---|"
    assert lines[2].startswith("| 2 | 3.1333333333333 |")


def test_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "table", "--rows", "10,2", "--format", "json")
    doc = json.loads(out)
    assert [c["method"] for c in doc["columns"]] == ["series-a", "series-b", "series-c"]
    for col in doc["columns"]:
        assert [r["n"] for r in col["rows"]] == [2, 10]
        for r in col["rows"]:
            v = Fraction(int(r["value"]["num"]), int(r["value"]["den"]))
            assert Fraction(r["decimal"]) <= v < Fraction(r["decimal"]) + Fraction(1, 10**13)


def test_deterministic_output(capsys):
    first = run(capsys, "table", "--format", "json")
    second = run(capsys, "table", "--format", "json")
    assert first == second


def test_verify_madhava(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "madhava")
    assert code == 0
    assert "PASS madhava-approximation" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all")
    assert code == 0
    assert "FAIL" not in out
    assert "WARN table[10][series-b]" in out
    assert "PASS table[71][series-c]" in out
    assert "beats-iterated-aitken[series-b][n=40]" in out


def test_verify_failure_exit_1(capsys, monkeypatch):
    from madhava import verify

    monkeypatch.setitem(verify.SUITES, "madhava", lambda: iter([verify.Check("boom", verify.FAIL, "x")]))
    code, out, _ = run(capsys, "verify", "--suite", "madhava")
    assert code == 1
    assert out.splitlines()[-1] == "FAILED: boom"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "madhava", "compute", "--method", "series-c", "--n", "2"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.splitlines()[0] == "3.1414634146341"
