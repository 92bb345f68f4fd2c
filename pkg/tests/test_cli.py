import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from sl2words.cli import flatten, run

SCHEMA = json.loads(resources.files("sl2words").joinpath("schema.json").read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def doc_of(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    doc = json.loads(out)
    command = argv[0]
    jsonschema.validate(doc, SCHEMA)
    jsonschema.validate(doc, {**SCHEMA, "$ref": f"#/$defs/{command}"})
    return doc


def test_trace_poly_golden():
    assert doc_of("trace-poly", "[x,y]") == {"poly": "s^2 + t^2 + u^2 - s*t*u - 2"}


def test_markoff_golden():
    assert doc_of("markoff", "--d", "5") == {
        "smooth": True, "rational": False, "brauer_quotient": "Z2xZ2", "class": "(t^2-4, 5)"}
    assert doc_of("markoff", "--d", "-4")["singular_points"] == [[0, 0, 0]]
    assert doc_of("markoff", "--d", "2", "--field", "Fp:5")["points"] == 6
    assert doc_of("markoff", "--d", "1", "--field", "Fp:5")["smooth"] is False  # 1 = -4


def test_solve():
    doc = doc_of("solve", "--word", "[x,y]", "--alpha", "[[0,-1],[1,3]]", "--field", "Q")
    assert doc["status"] == "solved" and doc["verified"] is True
    doc = doc_of("solve", "--word", "[x,y]", "--alpha", "[[-1,0],[0,-1]]")
    assert doc["status"] == "empty" and doc["certificate"]["invariants"] == {"inf": -1, "2": -1}
    doc = doc_of("solve", "--word", "x^2y", "--alpha", "[[0,-1],[1,3]]")
    assert doc["status"] == "unsupported"
    doc = doc_of("solve", "--word", "[x,y]", "--alpha", "[[1,1],[0,1]]", "--field", "Fp:3")
    assert doc["status"] == "empty"
    doc = doc_of("solve", "--word", "[x,y]^2", "--alpha", "[[0,-1],[1,5]]", "--bound", "3")
    assert doc["status"] == "search_exhausted"


@pytest.mark.parametrize("argv", [
    ("factor", "[x^2,y]"),
    ("factor", "x^2y"),
    ("points", "--d", "2", "--limit", "4"),
    ("points", "--d", "1", "--field", "Fp:5", "--emit-list"),
    ("points", "--word", "[x^2,y]", "--a", "4", "--limit", "2"),
    ("conic", "--point", "3,3,6"),
    ("conic", "--point", "0,0,0"),
    ("conic", "--point", "0,1,0", "--field", "Fp:7"),
    ("conic", "--point", "1,2,5"),
    ("hilbert", "-1", "-1"),
    ("hilbert", "2", "3", "--place", "3"),
    ("invariants", "2", "3"),
    ("invariants", "--d", "-3", "--point", "1,0,0"),
    ("count", "--word", "[x,y]", "--alpha", "[[0,-1],[1,0]]", "--field", "Fp:3", "--emit-list"),
    ("verify", "equivalences", "--p", "3"),
    ("verify", "fiber-counts", "--p", "5", "--corrected"),
    ("verify", "flatness", "--p", "5"),
    ("verify", "commuting", "--p", "3"),
])
def test_documents_validate_and_text_matches(argv):
    doc = doc_of(*argv)
    code, text, _ = call(*argv, "--format", "text")
    assert code == 0
    doc.pop("seconds", None)
    assert [x for x in text.splitlines() if not x.startswith("seconds")] == flatten(doc)


def test_specific_values():
    assert doc_of("conic", "--point", "3,3,6")["M"] == [["1/5", "-1/5"], ["11/5", "14/5"]]
    assert doc_of("conic", "--point", "0,0,0")["failing_places"] == ["inf", "2"]
    assert doc_of("count", "--word", "[x,y]", "--alpha", "[[0,-1],[1,0]]", "--field", "Fp:3")["count"] == 64
    assert doc_of("hilbert", "2", "3", "--place", "3")["symbols"] == {"3": -1}
    assert doc_of("verify", "fiber-counts", "--p", "5")["ok"] is False
    assert doc_of("verify", "fiber-counts", "--p", "5", "--corrected")["ok"] is True


def test_csv_outputs(tmp_path):
    path = tmp_path / "pts.csv"
    doc_of("points", "--d", "1", "--field", "Fp:3", "--emit-list", "--csv", str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "s,t,u,F,in_V" and len(lines) == 17
    path = tmp_path / "rows.csv"
    doc_of("verify", "fiber-counts", "--p", "7", "--csv", str(path))
    assert len(path.read_text().splitlines()) == 6


@pytest.mark.parametrize("argv", [
    ("trace-poly", "[x,y"),
    ("solve", "--word", "[x,y]", "--alpha", "[[1,2],[3]]"),
    ("solve", "--word", "[x,y]", "--alpha", "[[1,1],[1,1]]"),
    ("conic", "--point", "2,2,2"),
    ("markoff", "--d", "abc"),
    ("count", "--word", "[x,y]", "--alpha", "[[1,0],[0,1]]", "--field", "Fp:29"),
    ("count", "--word", "[x,y]", "--alpha", "[[1,0],[0,1]]"),
    ("hilbert", "0", "3"),
    ("nonsense",),
    ("solve", "--word", "[x,y]"),
])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""


def test_internal_error_exits_3(monkeypatch):
    from sl2words import cli
    from sl2words.errors import InvariantError

    def broken(w):
        raise InvariantError("forced")

    monkeypatch.setattr(cli, "trace_polynomial", broken)
    code, _, err = call("trace-poly", "[x,y]")
    assert code == 3 and "forced" in err


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "sl2words", "trace-poly", "[x,y]"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout) == {"poly": "s^2 + t^2 + u^2 - s*t*u - 2"}
