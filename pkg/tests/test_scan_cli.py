import json
from pathlib import Path

import pytest

from digitclass.cli import main
from digitclass.errors import DomainError
from digitclass.scan import ScanConfig, run_scan


def test_config_validation():
    with pytest.raises(DomainError):
        ScanConfig(checks=("nope",), m_max=100)
    with pytest.raises(DomainError):
        ScanConfig(checks=("girstmair",), m_min=100, m_max=100)
    with pytest.raises(DomainError):
        ScanConfig(checks=("girstmair",), m_max=100, workers=0)


def test_scan_deterministic_across_workers(tmp_path):
    outs = []
    for workers in (1, 3):
        out = tmp_path / f"w{workers}"
        cfg = ScanConfig(checks=("girstmair", "prop-s"), m_min=3, m_max=400,
                         workers=workers, segment=64, out_dir=str(out))
        run_scan(cfg)
        outs.append(out)
    assert (outs[0] / "records.jsonl").read_bytes() == (outs[1] / "records.jsonl").read_bytes()
    assert (outs[0] / "summary.csv").read_bytes() == (outs[1] / "summary.csv").read_bytes()
    assert (outs[0] / "extras.json").read_bytes() == (outs[1] / "extras.json").read_bytes()


def test_scan_records_sorted_and_roundtrip(tmp_path):
    cfg = ScanConfig(checks=("girstmair",), m_min=3, m_max=300,
                     n_policy="smallest5", out_dir=str(tmp_path))
    result = run_scan(cfg)
    rows = [json.loads(line) for line in open(result.jsonl_path)]
    keys = [(int(r["m"]), int(r["n"] or 0)) for r in rows]
    assert keys == sorted(keys)
    assert all(set(r) == {"check", "m", "n", "p", "lhs", "rhs", "pass", "aux"}
               for r in rows)


def test_scan_empty_range(tmp_path):
    # no qualifying m in [3, 5): tested=0, empty JSONL
    cfg = ScanConfig(checks=("girstmair",), m_min=3, m_max=5, out_dir=str(tmp_path))
    result = run_scan(cfg)
    assert result.n_records == 0
    assert (tmp_path / "records.jsonl").read_text() == ""


def test_scan_resume(tmp_path):
    full = tmp_path / "full"
    cfg = ScanConfig(checks=("girstmair",), m_min=3, m_max=300, out_dir=str(full))
    run_scan(cfg)
    split = tmp_path / "split"
    run_scan(ScanConfig(checks=("girstmair",), m_min=3, m_max=150, out_dir=str(split)))
    run_scan(ScanConfig(checks=("girstmair",), m_min=3, m_max=300,
                        out_dir=str(split), resume_from=150))
    assert (full / "records.jsonl").read_bytes() == (split / "records.jsonl").read_bytes()
    assert (full / "summary.csv").read_bytes() == (split / "summary.csv").read_bytes()


def test_main_prime_extras_histogram(tmp_path):
    cfg = ScanConfig(checks=("main-prime",), m_min=3, m_max=300,
                     n_values=(10,), out_dir=str(tmp_path))
    run_scan(cfg)
    extras = json.loads((tmp_path / "extras.json").read_text())
    hist = extras["main_prime_m_mod_p_histogram"]["11"]
    assert sum(hist.values()) > 0


def test_cli_expand_ok(capsys):
    assert main(["expand", "--m", "7", "--n", "10"]) == 0
    out = capsys.readouterr().out
    assert "period=6" in out and "1 4 2 8 5 7" in out


def test_cli_expand_usage_error():
    assert main(["expand", "--m", "4", "--n", "2"]) == 2


def test_cli_verify_pass(capsys):
    assert main(["verify", "girstmair", "--m", "7", "--n", "10"]) == 0
    row = json.loads(capsys.readouterr().out.splitlines()[0])
    assert row["pass"] is True and row["lhs"] == "11"


def test_cli_verify_domain_error():
    assert main(["verify", "girstmair", "--m", "8", "--n", "10"]) == 2


def test_cli_verify_strict_failure(capsys):
    assert main(["verify", "main-prime", "--m", "19", "--n", "10",
                 "--p", "11", "--strict"]) == 1


def test_cli_scan_and_strict(tmp_path, capsys):
    out = tmp_path / "scan"
    assert main(["scan", "--check", "girstmair", "--m-max", "200",
                 "--out", str(out)]) == 0
    assert main(["scan", "--check", "main-prime", "--m-max", "100",
                 "--n", "10", "--out", str(tmp_path / "s2"), "--strict"]) == 1


def test_cli_ff_composite_q():
    assert main(["ff", "rudnick", "--q", "4"]) == 2


def test_cli_stats_sigma(capsys):
    assert main(["stats", "sigma", "--m-min", "1000", "--m-max", "2000"]) == 0
    assert "max_normalized" in capsys.readouterr().out


def test_result_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("RESULT_DIR", str(tmp_path / "envout"))
    assert main(["scan", "--check", "girstmair", "--m-max", "100"]) == 0
    assert (tmp_path / "envout" / "records.jsonl").exists()
