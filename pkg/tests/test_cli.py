import csv
import io as _io
import json
from pathlib import Path

import pytest

from dtwmean.cli import main

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def run(*argv):
    out = _io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_bound_two_series():
    code, text = run("bound", DATA / "two-series-len3.csv")
    assert code == 0 and text.splitlines()[0] == "rho=4"


def test_bound_json():
    code, text = run("bound", DATA / "fig1-sample.csv", "--format", "json")
    assert code == 0 and json.loads(text)["rho"] == 4


def test_dtw_with_path():
    code, text = run("dtw", DATA / "x.csv", DATA / "y.csv", "--path")
    doc = json.loads(text)
    assert code == 0 and doc["distance"] == 1 and doc["path"][0] == [1, 1]


def test_mean_restricted_and_unrestricted():
    code, text = run("mean", "--restrict", 4, DATA / "fig1-sample.csv")
    doc = json.loads(text)
    assert code == 0 and set(doc) >= {"minimizer", "value", "m", "method", "configs"}
    assert doc["value"] == pytest.approx(0.5)
    code, text = run("mean", "--unrestricted", "--caps", DATA / "caps.json", DATA / "fig1-sample.csv")
    assert code == 0 and json.loads(text)["m"] == 4


def test_mean_symbolic():
    code, text = run("mean", "--unrestricted", "--space", DATA / "binary-space.json", DATA / "binary-sample.json")
    assert code == 0 and json.loads(text)["method"] == "length-sweep"


def test_variance_curve_argmin_row():
    code, text = run("variance-curve", DATA / "fig1-sample.csv", "--max-m", 6)
    rows = list(csv.DictReader(_io.StringIO(text)))
    assert code == 0 and [r["m"] for r in rows] == [str(m) for m in range(1, 7)]
    marked = [r["m"] for r in rows if r["argmin_candidate"]]
    assert marked == ["4"]
    assert json.loads(rows[3]["argmin_candidate"]) == pytest.approx([0, -0.5, 0.5, 0])


def test_reduce_log(tmp_path):
    code, text = run("reduce", DATA / "two-series-len3.csv", "--candidate", DATA / "long-candidate.csv")
    doc = json.loads(text)
    assert code == 0 and len(doc["final"]) <= doc["rho"]
    assert len(doc["f_trajectory"]) == len(doc["removed"]) + 1


def test_reduce_inline_candidate():
    code, text = run("reduce", DATA / "fig1-sample.csv", "--candidate", "0,1,1,0,-1,0", "--verbose")
    doc = json.loads(text)
    assert code == 0 and len(doc["steps"]) == len(doc["removed"])


def test_demo_nonexistence_csv(capsys):
    code, text = run("demo-nonexistence", "--grid-step", "0.01")
    rows = list(csv.reader(_io.StringIO(text)))
    assert code == 0 and rows[0] == ["family", "t", "F"]
    assert {r[0] for r in rows[1:]} == {"(1,t)", "(t)"}
    assert "best_family" in capsys.readouterr().err


def test_wgraph_commands(tmp_path):
    code, text = run("wgraph", "check", DATA / "graph.json")
    assert code == 0 and json.loads(text) == {"valid": True, "violations": [], "compact": False}
    code, text = run("wgraph", "compactify", DATA / "graph.json")
    assert json.loads(text)["edges"] == [[1, 1], [2, 2], [3, 3]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"m": 2, "n": 2, "edges": [[1, 1], [2, 1]]}))
    code, text = run("wgraph", "check", bad)
    assert code == 1 and not json.loads(text)["valid"]
    assert run("wgraph", "compactify", bad)[0] == 2


@pytest.mark.parametrize("argv", [
    ["bound", "missing.csv"],
    ["mean", "--restrict", "0", str(DATA / "fig1-sample.csv")],
    ["mean", str(DATA / "fig1-sample.csv")],
    ["frobnicate"],
    ["bound", str(DATA / "fig1-sample.csv"), "--tolerance", "-1"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv, out=_io.StringIO()) == 2


def test_malformed_json_exit_2(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run("bound", path)[0] == 2


def test_verify_reports_violation(monkeypatch):
    from dtwmean import cli
    from dtwmean.verify import CheckResult

    monkeypatch.setattr(cli, "run_verification", lambda seed: [CheckResult("x", 1, {"why": "test"})])
    code, text = run("verify")
    assert code == 1 and json.loads(text.splitlines()[0])["ok"] is False


def test_bound_with_length_one_series(tmp_path):
    path = tmp_path / "s.csv"
    path.write_text("5\n1,2,3\n")
    code, text = run("bound", path)
    assert code == 0 and text.splitlines()[:2] == ["rho=3", "core=[1]"]
    assert "not applicable" in text
