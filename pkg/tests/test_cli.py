"""Command-line interface: exit codes, formats, config, determinism."""

import csv
import io
import json
import math

import pytest

from hplane.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_verify_series_passes(capsys):
    code, out, _ = run_cli(["verify", "series", "--order", "4"], capsys)
    assert code == 0
    assert "FAIL" not in out
    assert "4/4 checks passed" in out


def test_verify_json_matches_schema(capsys, tmp_path):
    import importlib.resources as resources
    schema = json.loads(resources.files("hplane")
                        .joinpath("report_schema.json").read_text())
    props = set(schema["items"]["properties"])
    required = set(schema["items"]["required"])
    statuses = set(schema["items"]["properties"]["status"]["enum"])

    code, out, _ = run_cli(["verify", "calculus", "--format", "json"], capsys)
    assert code == 0
    checks = json.loads(out)
    assert checks
    for c in checks:
        assert required <= set(c) <= props
        assert c["status"] in statuses
        assert c["max_error"] >= 0.0


def test_verify_all_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / f"report{i}.json" for i in (0, 1)]
    for p in paths:
        code, _, _ = run_cli(["verify", "all", "--seed", "42",
                              "--format", "json", "--out", str(p)], capsys)
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_corrupted_rule_fails_and_names_relation(capsys):
    code, out, _ = run_cli(["verify", "crossprod", "--corrupt"], capsys)
    assert code == 1
    assert "FAIL" in out
    assert "J3G" in out  # names the broken composite relation


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(["verify", "calculus", "--format", "csv"], capsys)
    assert code == 0
    rows = parse_csv(out)
    assert rows and set(rows[0]) == {"suite", "check", "status", "max_error",
                                     "witness"}
    assert all(r["status"] == "pass" for r in rows)


def test_propagator_sectors_and_additivity(capsys):
    code, out, _ = run_cli(
        ["propagator", "--dx", "2.0", "--y", "1.0", "--yprime", "2.0",
         "--mu", "1.0", "--h", "0.2", "--sector", "all"], capsys)
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 3
    vals = {r["sector"]: float(r["value"]) for r in rows}
    assert abs(vals["0"] + vals["1"] - vals["extended"]) \
        <= 1e-10 * abs(vals["extended"])
    assert all(float(r["est_error"]) >= 0.0 for r in rows)


def test_propagator_rejects_coincidence(capsys):
    code, _, err = run_cli(
        ["propagator", "--dx", "0.0", "--y", "1.0", "--yprime", "1.0"],
        capsys)
    assert code == 1
    assert "coincidence" in err


def test_invariance_spread(capsys):
    code, out, _ = run_cli(
        ["invariance", "--coshd", "1.2", "--pairs", "3"], capsys)
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 3
    spread = float(rows[0]["spread"])
    assert spread <= 1e-5


def test_modes_grid(capsys):
    code, out, _ = run_cli(
        ["modes", "--k", "0.5", "--kappa", "2.0",
         "--grid", "0:1:3;0.5:2:3"], capsys)
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 9
    assert set(rows[0]) == {"x", "y", "re", "im"}


def test_modes_bad_grid_is_usage_error(capsys):
    code, _, err = run_cli(["modes", "--grid", "nonsense"], capsys)
    assert code == 2
    assert "grid" in err


def test_integrate_reference_value(capsys):
    from scipy.special import kv
    code, out, _ = run_cli(["integrate", "--ydeg", "2"], capsys)
    assert code == 0
    row = json.loads(out)[0]
    expected = math.sqrt(math.pi) * 2.0 * kv(1, 2.0)
    assert abs(row["re"] - expected) <= 1e-12 * expected
    assert abs(row["im"]) <= 1e-15
    assert row["method"] == "closed-form"


def test_integrate_sector1_overflow_is_reported(capsys):
    code, _, err = run_cli(["integrate", "--sector", "1", "--h", "0.05"],
                           capsys)
    assert code == 1
    assert "weight" in err


def test_config_file_flags_win(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("h = 0.3\nyprime = 2.0  # comment\n")
    code, out, _ = run_cli(
        ["propagator", "--config", str(cfg), "--h", "0.1", "--dx", "2.0"],
        capsys)
    assert code == 0
    rows = parse_csv(out)
    assert float(rows[0]["h"]) == 0.1       # flag beats config
    assert float(rows[0]["yprime"]) == 2.0  # config beats default


def test_config_unknown_key_is_usage_error(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("bogus = 1\n")
    code, _, err = run_cli(["propagator", "--config", str(cfg)], capsys)
    assert code == 2
    assert "bogus" in err


def test_figures_written_next_to_output(tmp_path, capsys):
    out = tmp_path / "modes.csv"
    code, _, err = run_cli(
        ["modes", "--grid", "0:1:3;0.5:2:3", "--figures",
         "--out", str(out)], capsys)
    assert code == 0
    assert out.exists()
    png = tmp_path / "modes.png"
    assert png.exists() and png.stat().st_size > 0
    assert str(png) in err
