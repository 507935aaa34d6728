"""Command-line surface: outputs, exit codes, determinism."""

import json
import os
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "rmbetti"]


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(CLI + list(args), capture_output=True, text=True,
                          env=full_env)


def test_dim_text_and_agreement():
    proc = run("dim", "--q", "2", "--m", "4", "--r", "2")
    assert proc.returncode == 0
    assert "11" in proc.stdout and "all sources agree: True" in proc.stdout


def test_dim_full_space():
    proc = run("dim", "--q", "3", "--m", "2", "--r", "4", "--output", "json",
               "--no-timing")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["code"]["k"] == 9
    assert report["details"]["generator_rank"] == 9


def test_bad_parameters_exit_2():
    assert run("dim", "--q", "6", "--m", "2", "--r", "1").returncode == 2
    assert run("dim", "--q", "3", "--m", "2", "--r", "9").returncode == 2
    assert run("ghw", "--q", "0", "--m", "1", "--r", "0").returncode == 2
    assert run("certificate", "--q", "3", "--m", "3", "--r", "4").returncode == 2


def test_distance_reports_both_routes():
    proc = run("distance", "--q", "3", "--m", "2", "--r", "2", "--output",
               "json", "--no-timing")
    report = json.loads(proc.stdout)
    assert proc.returncode == 0
    assert report["details"] == {"formula": 3, "bruteforce": 3,
                                 "method": "formula+bruteforce"}


def test_ghw_profile_output():
    proc = run("ghw", "--q", "2", "--m", "3", "--r", "1", "--output", "json",
               "--no-timing")
    report = json.loads(proc.stdout)
    assert report["ghw"] == [4, 6, 7, 8]


def test_betti_csv_contract():
    proc = run("betti", "--q", "2", "--m", "1", "--r", "1", "--output", "csv")
    assert proc.returncode == 0
    assert proc.stdout == "i,j,beta\n0,0,1\n1,1,2\n2,2,1\n"


def test_betti_both_backends_and_json():
    proc = run("betti", "--q", "2", "--m", "2", "--r", "1", "--backend", "both",
               "--output", "json", "--no-timing")
    report = json.loads(proc.stdout)
    assert report["betti"] == [{"i": 0, "j": 0, "beta": 1},
                               {"i": 1, "j": 2, "beta": 6},
                               {"i": 2, "j": 3, "beta": 8},
                               {"i": 3, "j": 4, "beta": 3}]
    assert report["purity"]["pure"] and report["purity"]["linear"]


def test_purity_match_exit_zero():
    proc = run("purity", "--q", "3", "--m", "2", "--r", "2", "--output", "json",
               "--no-timing")
    report = json.loads(proc.stdout)
    assert proc.returncode == 0
    assert report["purity"]["pure"] is False
    assert report["prediction"]["pure_predicted"] is False
    assert report["match"] is True


def test_certificate_json_and_exit():
    proc = run("certificate", "--q", "4", "--m", "2", "--r", "4", "--output",
               "json", "--no-timing")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    cert = report["certificate"]
    assert cert["weight"] == 4 and cert["d1"] == 3
    assert all(cert["checks"].values())
    assert report["match"] is True


def test_verify_theorem_text_and_exit():
    proc = run("verify-theorem", "--q", "3", "--m", "2", "--r-all")
    assert proc.returncode == 0
    assert "all rows match: True" in proc.stdout


def test_verify_theorem_csv():
    proc = run("verify-theorem", "--q", "3", "--m", "2", "--r-all",
               "--output", "csv")
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "q,m,r,n,k,d,predicted,computed,certificate_ok,match"
    assert len(lines) == 6


def test_verify_mds_sweep():
    proc = run("verify-mds", "--q", "3", "--m", "2", "--r-all", "--output",
               "json", "--no-timing")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["match"] is True
    decided = [row["mds_computed"] for row in report["rows"]]
    assert decided == [True, False, False, True, True]


def test_too_large_exit_3_with_machine_readable_reason():
    proc = run("betti", "--q", "3", "--m", "3", "--r", "2")
    assert proc.returncode == 3
    payload = json.loads(proc.stderr.strip().splitlines()[-1])
    assert payload["error"] == "too_large"


def test_guard_env_override():
    proc = run("betti", "--q", "3", "--m", "2", "--r", "2",
               env={"RM_RESOLVE_GUARD_N": "4"})
    assert proc.returncode == 3
    proc = run("betti", "--q", "3", "--m", "2", "--r", "2",
               "--max-n-betti", "9", env={"RM_RESOLVE_GUARD_N": "4"})
    assert proc.returncode == 0  # explicit flag beats the environment


def test_out_file_writing(tmp_path):
    target = tmp_path / "report.json"
    proc = run("purity", "--q", "2", "--m", "2", "--r", "1", "--output", "json",
               "--no-timing", "--out", str(target))
    assert proc.returncode == 0 and proc.stdout == ""
    report = json.loads(target.read_text())
    assert report["match"] is True


def test_json_timing_included_by_default():
    proc = run("dim", "--q", "2", "--m", "2", "--r", "1", "--output", "json")
    report = json.loads(proc.stdout)
    assert isinstance(report["timing_ms"], int)


def test_repeated_runs_byte_identical():
    args = ("verify-theorem", "--q", "3", "--m", "2", "--r-all", "--output",
            "json", "--no-timing")
    first = run(*args)
    second = run(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_jobs_do_not_change_bytes():
    base = run("verify-theorem", "--q", "3", "--m", "2", "--r-all",
               "--output", "json", "--no-timing")
    parallel = run("verify-theorem", "--q", "3", "--m", "2", "--r-all",
                   "--output", "json", "--no-timing", "--jobs", "4")
    assert base.stdout == parallel.stdout
    assert parallel.returncode == 0
