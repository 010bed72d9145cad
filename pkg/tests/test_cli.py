import json
import subprocess
import sys

import pytest

from powerlab.cli import EXIT_CAPACITY, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_c6(capsys):
    code, out, _ = run(capsys, "analyze", "6", "--proper", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert (d["connected"], d["diameter"], d["kappa"], d["planar"]) == (True, 2, 2, True)
    assert d["center_labels"] == ["1", "5"]


def test_analyze_klein(capsys):
    code, out, _ = run(capsys, "analyze", "2,2", "--format", "json")
    d = json.loads(out)
    assert (d["connected"], d["component_count"], d["diameter"]) == (False, 3, "inf")


def test_analyze_c7_writes_dot(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", "7", "--proper", "--dot", "--format", "json",
                       "--output-dir", str(tmp_path))
    assert code == 0
    dot = (tmp_path / "proper_C7.dot").read_text()
    assert dot.count(" -- ") == 15  # K6
    report = json.loads((tmp_path / "proper_C7.report.json").read_text())
    assert report["planar"] is False
    assert report["kuratowski_witness"]["kind"] == "K5-subdivision"


def test_analyze_full_variant(capsys):
    _, out, _ = run(capsys, "analyze", "4", "--full", "--format", "json")
    assert json.loads(out)["n_vertices"] == 4


def test_analyze_bad_spec(capsys):
    code, _, err = run(capsys, "analyze", "2,x")
    assert code == EXIT_USAGE and "malformed" in err and len(err.strip().splitlines()) == 1


def test_analyze_over_cap(capsys, monkeypatch):
    monkeypatch.setenv("POWERLAB_CAP", "100")
    code, _, err = run(capsys, "analyze", "101")
    assert code == EXIT_CAPACITY and "cap of 100" in err


def test_verify_l21(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "L2.1", "--max-order", "16")
    assert code == 0
    assert "L2.1 counterexample C2xC4" in out


def test_verify_empty_sweep(capsys):
    code, out, err = run(capsys, "verify", "--max-order", "1")
    assert code == 0 and "empty sweep" in err
    assert "vacuous" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--theorems", "nope")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--min-order", "20", "--max-order", "10")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--families", "quaternion")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--max-order", "201")[0] == EXIT_CAPACITY


def test_verify_families_filter(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "T-con", "--families", "cyclic",
                       "--max-order", "20", "--format", "json")
    doc = json.loads(out)
    assert doc["verdicts"][0]["groups_checked"] == 19
    assert doc["config"]["families"] == ["cyclic"]


def test_verify_oracle_mode(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "T-con", "--oracle", "--max-order", "12",
                       "--format", "json")
    ids = [v["theorem_id"] for v in json.loads(out)["verdicts"]]
    assert code == 0 and ids == ["T-con", "oracle-agreement"]


def test_verify_writes_reports(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--max-order", "12", "--output-dir", str(tmp_path))
    assert code == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    assert doc["schema_version"] == 1
    assert (tmp_path / "summary.txt").read_text().startswith("theorem")


def test_verify_unwritable_output(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, err = run(capsys, "verify", "--max-order", "4", "--output-dir", str(blocker / "sub"))
    assert code == 4 and "I/O error" in err


@pytest.mark.parametrize("arg, names", [
    ("8", ["C8", "C2xC4", "C2xC2xC2"]),
    ("12", ["C4xC3", "C2xC2xC3"]),
    ("7", ["C7"]),
])
def test_enumerate(capsys, arg, names):
    code, out, _ = run(capsys, "enumerate", arg)
    assert code == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == names


def test_enumerate_range(capsys):
    _, out, _ = run(capsys, "enumerate", "1..16")
    assert len(out.splitlines()) == 1 + 1 + 1 + 2 + 1 + 1 + 1 + 3 + 2 + 1 + 1 + 2 + 1 + 1 + 1 + 5
    assert run(capsys, "enumerate", "9..3")[0] == EXIT_USAGE


def test_export(capsys):
    code, out, _ = run(capsys, "export", "3", "--format", "edgelist")
    assert out.splitlines()[1:] == ["1-2"]
    _, out, _ = run(capsys, "export", "2,2", "--format", "json")
    assert json.loads(out)["edges"] == []


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "powerlab.cli", "enumerate", "4"],
                          capture_output=True, text=True, check=True)
    assert "C2xC2" in proc.stdout
