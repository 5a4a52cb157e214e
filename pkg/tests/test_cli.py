import csv
import io
import json
import subprocess
import sys

import pytest

from nodecycles import cli

FAM = ["--gl", "2", "--gr", "-3", "--al", "1", "--ar", "-1.4"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_two_cycles(capsys):
    code, out, _ = run(capsys, "analyze", *FAM, "--b", "0.005")
    rep = json.loads(out)
    assert code == 0 and rep["count"] == 2
    assert [c["stability"] for c in rep["cycles"]] == ["stable", "unstable"]
    assert rep["cycles"][0]["y0"] == pytest.approx(0.19280058433066094, abs=1e-9)
    assert rep["regime"]["tag"] == "at-most-two" and rep["regime"]["exact"] is False
    assert "seconds" not in rep


def test_analyze_floats_full_precision(capsys):
    _, out, _ = run(capsys, "analyze", *FAM, "--b", "0.005")
    assert '"b": 0.0050000000000000001' in out


def test_analyze_csv(capsys):
    code, out, _ = run(capsys, "analyze", "--gl", "2", "--gr", "3", "--al", "1", "--ar", "-1", "--b", "0.05", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == cli.SCAN_HEADER
    assert rows[1][:2] == ["0.050000000000000003", "0"] and rows[1][2:] == [""] * 6


def test_unbounded_domain_is_string(capsys):
    _, out, _ = run(capsys, "analyze", "--gl", "-2", "--gr", "3", "--al", "1", "--ar", "-1", "--b", "0")
    assert json.loads(out)["domain"]["y0_max"] == "inf"


@pytest.mark.parametrize("argv", [
    ["analyze", "--gl", "1", "--gr", "-3", "--al", "1", "--ar", "-1", "--b", "0"],
    ["analyze", "--gl", "2", "--gr", "-3", "--al", "-1", "--ar", "-1", "--b", "0"],
    ["scan", *FAM, "--b-from", "0.1", "--b-to", "0.0", "--steps", "5"],
    ["scan", *FAM, "--b-from", "0", "--b-to", "0.1", "--steps", "1"],
    ["orbit", *FAM, "--b", "0.005", "--y0", "5.0"],
    ["analyze", *FAM],
    ["verify", "r9"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(cli.main(argv))
    assert exc.value.code == 2
    assert capsys.readouterr().err


def test_scan_summary_and_rows(capsys, tmp_path):
    out_csv = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "scan", *FAM, "--b-from", "0.001", "--b-to", "0.012", "--steps", "12", "--out", str(out_csv))
    rep = json.loads(out)
    assert code == 0
    assert rep["b_tilde"] == pytest.approx(0.00816142332387235, abs=1e-9)
    assert [r["count"] for r in rep["regimes"]] == [2, 0]
    rows = list(csv.reader(out_csv.open()))
    assert rows[0] == cli.SCAN_HEADER and len(rows) == 13


def test_scan_embedded_rows(capsys):
    _, out, _ = run(capsys, "scan", *FAM, "--b-from", "0.3", "--b-to", "0.4", "--steps", "3")
    rep = json.loads(out)
    assert [r["count"] for r in rep["rows"]] == ["0", "0", "0"]


def test_verify_deterministic(capsys):
    code, first, err = run(capsys, "verify", "r1", "--no-common-root")
    _, second, _ = run(capsys, "verify", "r1", "--no-common-root")
    assert code == 0 and first == second and "r1: PASS" in err
    assert json.loads(first)["passed"] is True


def test_verify_timing_flag(capsys):
    _, out, _ = run(capsys, "--timing", "verify", "appendix")
    assert "seconds" in json.loads(out)["sections"][0]["report"]


def test_verify_polys(capsys):
    _, out, _ = run(capsys, "verify", "appendix", "--polys")
    polys = json.loads(out)["sections"][0]["report"]["polynomials"]
    assert len(polys) == 15


def test_verify_failure_exit_1(capsys, monkeypatch):
    import nodecycles.algebra.appendix as ap

    monkeypatch.setattr(ap, "check_specializations", lambda: {"x": False})
    code, out, err = run(capsys, "verify", "appendix")
    assert code == 1 and json.loads(out)["passed"] is False and "FAIL" in err


def test_orbit_closes(capsys, tmp_path):
    path = tmp_path / "orbit.csv"
    code, _, _ = run(capsys, "orbit", *FAM, "--b", "0.005", "--y0", "0.19280058433066094",
                     "--turns", "2", "--per-leg", "8", "--out", str(path))
    rows = list(csv.reader(path.open()))
    assert code == 0 and rows[0] == cli.ORBIT_HEADER and len(rows) == 1 + 1 + 2 * 2 * 8
    assert float(rows[-1][2]) == pytest.approx(float(rows[1][2]), abs=1e-9)


def test_dumps_formats():
    text = cli.dumps({"a": 0.1, "b": float("nan"), "c": [1, True, None], "d": {}})
    assert json.loads(text) == {"a": 0.1, "b": "nan", "c": [1, True, None], "d": {}}
    assert "0.10000000000000001" in text


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nodecycles", "analyze", *FAM, "--b", "0.05"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["count"] == 0
