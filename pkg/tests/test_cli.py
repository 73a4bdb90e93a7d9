import csv
import json
import math

import pytest

from squarewell import cli

PI = math.pi


def run(tmp_path, *argv):
    out = tmp_path / "out.json"
    code = cli.main([*argv, "--out", str(out)])
    return code, (json.loads(out.read_text()) if out.exists() and out.suffix == ".json" else None)


def test_spectrum_family_a(tmp_path):
    code, rep = run(tmp_path, "spectrum", "--family", "A", "--count", "5")
    assert code == 0
    assert rep["spectrum"]["energies"] == pytest.approx([(n * PI) ** 2 for n in range(1, 6)], abs=1e-10)
    assert rep["tool_version"]
    assert len(rep["oracle_comparison"]) == 5
    assert all(r["relative_difference"] < 1e-5 for r in rep["oracle_comparison"])


def test_spectrum_family_b(tmp_path):
    code, rep = run(tmp_path, "spectrum", "--family", "B", "--count", "3")
    assert code == 0
    assert rep["spectrum"]["energies"][0] == 0.0
    assert rep["spectrum"]["zero_mode"] is True


def test_spectrum_custom(tmp_path):
    code, rep = run(tmp_path, "spectrum", "--custom", "1,0:0,1", "--count", "2")
    assert code == 0
    assert rep["spectrum"]["energies"] == pytest.approx([(PI / 2) ** 2, (3 * PI / 2) ** 2], abs=1e-10)


def test_spectrum_angles(tmp_path):
    code, rep = run(tmp_path, "spectrum", "--theta0", "0", "--thetaL", "0", "--count", "1", "--no-oracle")
    assert code == 0 and rep["oracle_comparison"] == []


def test_identical_runs_identical_bytes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert cli.main(["spectrum", "--family", "E", "--count", "4", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--custom", "0,0:1,0"],
        ["spectrum", "--custom", "garbage"],
        ["spectrum", "--family", "A", "--count", "0"],
        ["spectrum", "--family", "A", "--custom", "1,0:1,0"],
        ["spectrum", "--theta0", "0.5"],
        ["negscan", "--family", "A", "--qmax", "-1"],
        ["validate", "--families", "A,Q"],
        ["sweep", "--grid", "1"],
    ],
)
def test_usage_errors(tmp_path, argv, capsys):
    assert cli.main([*argv, "--out", str(tmp_path / "x")]) == 2
    assert "error" in capsys.readouterr().err


def test_incomplete_exit_code(tmp_path, monkeypatch):
    from squarewell import spectral

    monkeypatch.setattr(spectral, "positive_roots", lambda bc, need, k_limit: ([], []))
    code, _ = run(tmp_path, "spectrum", "--family", "A", "--count", "2")
    assert code == 3


def test_negscan_family_d(tmp_path):
    code, rep = run(tmp_path, "negscan", "--family", "D")
    assert code == 0
    assert rep["negative_scan"]["verdict"] == "eliminated"
    assert rep["negative_scan"]["oracle_negative_count"] == 0
    assert rep["paper_audit"] == []


def test_negscan_family_e(tmp_path):
    code, rep = run(tmp_path, "negscan", "--family", "E")
    assert code == 0
    scan = rep["negative_scan"]
    assert scan["verdict"] == "bound-states-found"
    assert scan["roots"] == pytest.approx([1.0], abs=1e-12)
    assert any(e["family"] == "E" and "no negative-energy" in e["claim"] for e in rep["paper_audit"])


def test_negscan_attractive_robin(tmp_path):
    code, rep = run(tmp_path, "negscan", "--custom", "2,1:1,0")
    assert code == 0
    assert rep["negative_scan"]["verdict"] == "bound-states-found"
    assert rep["negative_scan"]["oracle_negative_count"] >= 1


def test_negscan_inhomogeneous_shows_coefficients(tmp_path):
    code, rep = run(tmp_path, "negscan", "--custom", "1,0:1,0=1:0")
    assert code == 0
    sample = rep["negative_scan"]["particular_coefficients"][0]
    q = sample["qL"]
    G, H = sample["G"][0], sample["H"][0]
    assert G + H == pytest.approx(1.0)
    assert G * math.exp(q) + H * math.exp(-q) == pytest.approx(0.0, abs=1e-14)


def test_negscan_inconsistency_exit_code(tmp_path, monkeypatch):
    monkeypatch.setattr(cli, "negative_count", lambda *a, **k: 7)
    code, rep = run(tmp_path, "negscan", "--family", "A")
    assert code == 4
    assert rep["status"] == "inconsistent"


def test_sweep_csv_and_report(tmp_path):
    out, rpt = tmp_path / "s.csv", tmp_path / "s.json"
    assert cli.main(["sweep", "--grid", "4", "--N", "1000", "--out", str(out), "--report", str(rpt)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 16
    assert rows[0]["negative_count"] == "0"
    nn = [r for r in rows if r["theta0"] == r["thetaL"] == "1.5707963267948966"]
    assert nn[0]["zero_mode"] == "true"
    assert json.loads(rpt.read_text())["checks"][0]["passed"] is True


def test_hermiticity_command(tmp_path):
    code, rep = run(tmp_path, "hermiticity", "--family", "E", "--count", "8")
    assert code == 0
    assert rep["hermiticity"]["pair_count"] == 64
    assert rep["hermiticity"]["max_boundary_term"] < 1e-12


def test_validate_default(tmp_path):
    code, rep = run(tmp_path, "validate")
    assert code == 0
    assert rep["status"] == "ok"
    assert all(c["passed"] for c in rep["checks"])
    assert any(e["family"] == "E" for e in rep["paper_audit"])


def test_validate_strict_paper(tmp_path):
    code, rep = run(tmp_path, "validate", "--strict-paper")
    assert code != 0
    assert rep["status"] == "paper-disagreement"


def test_validate_restricted(tmp_path):
    code, rep = run(tmp_path, "validate", "--families", "A,B")
    assert code == 0
    assert rep["paper_audit"] == []


def test_validate_names_failing_check(tmp_path, monkeypatch, capsys):
    from squarewell.validation import CheckResult

    monkeypatch.setattr(cli, "run_all", lambda fams, N: [CheckResult("broken-thing", False, "forced")])
    code, rep = run(tmp_path, "validate")
    assert code != 0
    assert "broken-thing" in capsys.readouterr().err
