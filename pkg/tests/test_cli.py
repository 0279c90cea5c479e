import json
import subprocess
import sys

import pytest

from isoadams import cli
from isoadams.charts import from_csv, from_json


def run_cli(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mul_commutator_example(capsys):
    code, out, _ = run_cli(["mul", "Q0", "P(1)"], capsys)
    assert code == 0 and out.strip() == "P(1) Q0 + Q1"


def test_mul_qepr_basis(capsys):
    code, out, _ = run_cli(["mul", "Q0", "P(1)", "--basis", "qepr"], capsys)
    assert code == 0 and out.strip() == "Q0 P(1)"


def test_mul_classical_square_zero(capsys):
    code, out, _ = run_cli(["mul", "Sq1", "Sq1", "--flavor", "classical"], capsys)
    assert code == 0 and out.strip() == "0"


def test_mul_p_example(capsys):
    code, out, _ = run_cli(["mul", "P(1)", "P(2)"], capsys)
    assert code == 0 and out.strip() == "P(3)"


def test_mul_parse_error(capsys):
    code, _, err = run_cli(["mul", "Q0", "banana"], capsys)
    assert code == 2 and "position" in err


def test_resolve_tmax_zero(capsys):
    code, out, _ = run_cli(["resolve", "--flavor", "classical", "--tmax", "0"], capsys)
    assert code == 0
    assert out.strip().splitlines() == ["s,t,u,dim", "0,0,,1"]


def test_resolve_classical_h_family(tmp_path, capsys):
    out_file = tmp_path / "cl.json"
    code, _, _ = run_cli(
        ["resolve", "--flavor", "classical", "--tmax", "12", "--smax", "8",
         "--format", "json", "--out", str(out_file)], capsys)
    assert code == 0
    chart = from_json(out_file.read_text())
    names = {c["name"] for c in json.loads(out_file.read_text())["classes"]}
    assert {"h0", "h1", "h2", "h3"} <= names
    assert chart.dim(1, (1,)) == chart.dim(1, (2,)) == chart.dim(1, (4,)) == chart.dim(1, (8,)) == 1
    assert chart.dim(1, (3,)) == chart.dim(1, (5,)) == 0


def test_resolve_even_on_line(tmp_path, capsys):
    out_file = tmp_path / "g.csv"
    code, _, _ = run_cli(
        ["resolve", "--flavor", "G", "--tmax", "24", "--out", str(out_file)], capsys)
    assert code == 0
    chart = from_csv(out_file.read_text())
    for (s, deg), dim in chart.cells.items():
        assert deg[0] == 2 * deg[1] and dim > 0


def test_resolve_deterministic(tmp_path, capsys):
    f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
    for f in (f1, f2):
        code, _, _ = run_cli(
            ["resolve", "--flavor", "classical", "--tmax", "10", "--out", str(f)], capsys)
        assert code == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_resolve_formats(tmp_path, capsys):
    for fmt, probe in [("json", "isoadams-chart/1"), ("svg", "<svg"), ("ascii", "|")]:
        code, out, _ = run_cli(
            ["resolve", "--flavor", "classical", "--tmax", "6", "--format", fmt], capsys)
        assert code == 0 and probe in out


def test_compare_doubling_and_equality(tmp_path, capsys):
    cl = tmp_path / "cl.csv"
    g = tmp_path / "g.json"
    run_cli(["resolve", "--flavor", "classical", "--tmax", "12", "--out", str(cl)], capsys)
    run_cli(["resolve", "--flavor", "G", "--tmax", "24", "--format", "json", "--out", str(g)], capsys)
    code, out, _ = run_cli(["compare", str(cl), str(g), "--mode", "doubling"], capsys)
    assert code == 0 and "MATCH" in out
    code, out, _ = run_cli(["compare", str(cl), str(cl), "--mode", "equality"], capsys)
    assert code == 0


def test_compare_detects_perturbation(tmp_path, capsys):
    cl = tmp_path / "cl.csv"
    run_cli(["resolve", "--flavor", "classical", "--tmax", "10", "--out", str(cl)], capsys)
    bad = tmp_path / "bad.csv"
    text = cl.read_text().replace("2,2,,1", "2,2,,9")
    bad.write_text(text)
    code, out, _ = run_cli(["compare", str(cl), str(bad)], capsys)
    assert code == 1 and "(2, (2,))" in out


def test_compare_report_json(tmp_path, capsys):
    cl = tmp_path / "cl.csv"
    run_cli(["resolve", "--flavor", "classical", "--tmax", "8", "--out", str(cl)], capsys)
    rep = tmp_path / "rep.json"
    code, _, _ = run_cli(["compare", str(cl), str(cl), "--out", str(rep)], capsys)
    assert code == 0
    payload = json.loads(rep.read_text())
    assert payload["match"] is True and payload["mode"] == "equality"


def test_massey_example(capsys):
    code, out, _ = run_cli(["massey", "h0", "h1", "h0", "--tmax", "8", "--smax", "4"], capsys)
    assert code == 0
    assert "h1^2" in out and "indeterminacy 0" in out


def test_massey_precondition_guard(capsys):
    code, _, err = run_cli(["massey", "h0", "h0", "h1", "--tmax", "8", "--smax", "4"], capsys)
    assert code == 2 and "nonzero" in err


def test_massey_unknown_class(capsys):
    code, _, err = run_cli(["massey", "h9", "h0", "h0", "--tmax", "6", "--smax", "3"], capsys)
    assert code == 2 and "unknown class" in err


def test_isotropic_default_small(capsys):
    code, out, _ = run_cli(["isotropic", "--tmax", "16", "--smax", "5"], capsys)
    assert code == 0
    assert "verdict: MATCH" in out and "vanishing regions: ok" in out


def test_isotropic_tiny_window_safe_region(capsys):
    code, out, _ = run_cli(["isotropic", "--tmax", "12", "--smax", "4", "--nmax", "0"], capsys)
    assert code == 0 and "verdict: MATCH" in out


def test_isotropic_strict_truncation_exit(capsys):
    code, _, err = run_cli(
        ["isotropic", "--tmax", "12", "--smax", "4", "--nmax", "0", "--strict"], capsys)
    assert code == 3 and "window-truncated" in err


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "isoadams.cli", "frobnicate"], capture_output=True
    )
    assert proc.returncode == 2


def test_chart_roundtrip_json_csv(tmp_path, capsys):
    j = tmp_path / "c.json"
    c = tmp_path / "c.csv"
    run_cli(["resolve", "--flavor", "A0", "--tmax", "8", "--format", "json", "--out", str(j)], capsys)
    run_cli(["resolve", "--flavor", "A0", "--tmax", "8", "--format", "csv", "--out", str(c)], capsys)
    assert from_json(j.read_text()).cells == from_csv(c.read_text()).cells
