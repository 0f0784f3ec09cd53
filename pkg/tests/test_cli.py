import csv
import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from superjack.cli import CSV_COLUMNS, run

SCHEMA = json.loads(resources.files("superjack").joinpath("schema.json").read_text())


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), stdout=out)
    return status, out.getvalue()


def as_json(*argv):
    status, text = call(*argv, "--format", "json")
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    return status, doc


def test_pieri_example_csv():
    status, text = call("pieri", "--lambda", "(6,4,3;5,2,1)", "--n", "3", "--kind", "e", "--field", "alpha", "--format", "csv")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_COLUMNS
    row = next(r for r in rows if r["omega"] == "(5,2,0;7,5,4,1)")
    assert row["lambda"] == "(6,4,3;5,2,1)"
    assert row["kind"] == "e" and row["n"] == "3"


def test_pieri_example_total():
    from superjack.coeffield import var

    a = var("a")
    expected = (
        a**4
        * (2 * a + 3)
        * (3 * a + 4)
        * (416 * a**6 + 2000 * a**5 + 3484 * a**4 + 2608 * a**3 + 559 * a**2 - 256 * a - 108)
        / (1152 * (4 * a + 3) * (5 * a + 4) * (7 * a + 6) * (2 * a + 1) * (a + 1) ** 10)
    )
    status, doc = as_json("pieri", "--lambda", "(6,4,3;5,2,1)", "--n", "3")
    (row,) = [r for r in doc["coefficients"] if r["omega"] == "(5,2,0;7,5,4,1)"]
    assert row["total"] == str(expected)


def test_pretty_table():
    status, text = call("pieri", "--lambda", "(1;)", "--n", "1")
    assert status == 0
    assert "(1;1)" in text and "(0;2)" in text


def test_asm_sum_example():
    status, doc = as_json("asm-sum", "--n", "3", "--x", "7a-1,5a-3,4a-4", "--y", "6a-2,3a-5,a-7")
    assert status == 0
    assert doc["sum"] == "(-416*a^6-2000*a^5-3484*a^4-2608*a^3-559*a^2+256*a+108)/(a^6)"


def test_asm_sum_symbolic():
    status, doc = as_json("asm-sum", "--n", "2")
    assert status == 0 and doc["n"] == 2


@pytest.mark.parametrize("verb", ["jack", "macdonald"])
def test_expansion_verbs(verb):
    status, doc = as_json(verb, "--lambda", "(;2)")
    assert status == 0
    assert doc["lambda"] == "(;2)"
    assert [t["sp"] for t in doc["coeffs"]] == ["(;2)", "(;1,1)"]


def test_verify_pieri_example():
    status, doc = as_json("verify-pieri", "--max-degree", "4", "--max-fermion", "2", "--n", "2")
    assert status == 0 and doc["ok"]
    assert {r["suite"] for r in doc["reports"]} == {"pieri", "limits"}


@pytest.mark.parametrize(
    "verb",
    ["verify-dual", "verify-commutators", "verify-duality", "verify-sixvertex"],
)
def test_verify_verbs_small(verb):
    status, doc = as_json(verb, "--max-degree", "2", "--max-fermion", "1", "--n", "1")
    assert status == 0 and doc["ok"]


def test_verify_macdonald_reports_range():
    status, text = call("verify-macdonald", "--max-degree", "2", "--max-fermion", "1")
    assert status == 0
    assert "conjecture verified on range" in text


def _failing(name):
    from superjack.verify import Mismatch, Report

    def suite(*args, **kwargs):
        report = Report(name, checked=1)
        report.mismatches.append(Mismatch("(1;)", 1, "e", "(1;1)", "1", "2"))
        if name == "macdonald":
            report.notes.append("counterexample found")
        return report

    return suite


def test_mismatch_exit_status(monkeypatch, capsys):
    import superjack.cli as cli

    monkeypatch.setattr(cli, "verify_dual", _failing("dual"))
    status, text = call("verify-dual")
    assert status == 2
    assert "first counterexample (lambda, n, kind, omega) = ((1;), 1, e, (1;1))" in text
    assert "expected 1" in text and "got      2" in text


def test_counterexample_exit_status(monkeypatch):
    import superjack.cli as cli

    monkeypatch.setattr(cli, "verify_macdonald", _failing("macdonald"))
    status, text = call("verify-macdonald")
    assert status == 3
    assert "counterexample found" in text


def test_jobs_do_not_change_output():
    argv = ("verify-pieri", "--max-degree", "3", "--max-fermion", "1", "--n", "2", "--format", "json")
    assert call(*argv, "--jobs", "1") == call(*argv, "--jobs", "3")


def test_output_is_deterministic():
    argv = ("pieri", "--lambda", "(2,0;1)", "--n", "2", "--kind", "etilde", "--format", "csv")
    assert call(*argv) == call(*argv)


def test_out_file(tmp_path):
    target = tmp_path / "out.json"
    status, text = call("jack", "--lambda", "(0;1)", "--format", "json", "--out", str(target))
    assert status == 0 and text == ""
    jsonschema.validate(json.loads(target.read_text()), SCHEMA)


@pytest.mark.parametrize(
    "argv",
    [
        ("pieri", "--lambda", "(1,1;)", "--n", "1"),
        ("pieri", "--lambda", "garbage", "--n", "1"),
        ("pieri", "--lambda", "(1;)"),
        ("pieri", "--lambda", "(1;)", "--n", "1", "--kind", "g", "--field", "qt"),
        ("asm-sum", "--x", "a,b"),
        ("asm-sum", "--n", "2", "--x", "1", "--y", "2"),
        ("asm-sum", "--x", "a+", "--y", "1"),
        ("verify-pieri", "--jobs", "0"),
        ("frobnicate",),
    ],
)
def test_malformed_input(argv, capsys):
    status, text = call(*argv)
    assert status == 1
    err = capsys.readouterr().err
    assert err.startswith("superjack: error:") and err.count("\n") == 1


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "superjack", "asm-sum", "--n", "3", "--x", "7a-1,5a-3,4a-4", "--y", "6a-2,3a-5,a-7"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "(-416*a^6" in proc.stdout
