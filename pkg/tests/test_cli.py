from __future__ import annotations

import json
import subprocess
import sys

import pytest

from togliatti.cli import main


def run_cli(*args, env=None):
    proc = subprocess.run(
        [sys.executable, "-m", "togliatti.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )
    return proc


def test_analyze_json(capsys):
    code = main(["analyze", "x0^3,x1^3,x2^3,x0*x1*x2"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["togliatti"]["is_togliatti"] is True
    assert data["tags"]["minimal"] is True
    assert data["tags"]["smooth_minimal"] is True
    assert data["smoothness"]["is_smooth"] is True
    assert data["stability"]["verdict"] == "stable"
    assert "timing_ms" not in data


def test_analyze_selected_checks(capsys):
    code = main(["analyze", "x0^3,x1^3,x2^3,x0*x1*x2", "--checks", "wlp,togliatti"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["smoothness"] is None and data["stability"] is None
    assert data["wlp"]["failing_degrees"] == [2]


def test_analyze_text_format(capsys):
    code = main(["analyze", "x0^3,x1^3,x2^3,x0*x1*x2", "--format", "text"])
    assert code == 0
    out = capsys.readouterr().out
    assert "togliatti: True" in out and "certificate:" in out


def test_analyze_not_artinian_exits_2(capsys):
    code = main(["analyze", "x0^3,x1^3,x0*x1*x2"])
    assert code == 2
    assert "not artinian" in capsys.readouterr().err


def test_analyze_deterministic_output(capsys):
    main(["analyze", "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2"])
    first = capsys.readouterr().out
    main(["analyze", "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2"])
    second = capsys.readouterr().out
    assert first == second


def test_analyze_stdin_json(monkeypatch, capsys):
    import io

    blob = json.dumps(
        {"n": 2, "d": 3, "generators": [[3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 1]]}
    )
    monkeypatch.setattr(sys, "stdin", io.StringIO(blob))
    assert main(["analyze", "-", "--checks", "togliatti"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["togliatti"]["kernel_dimension"] == 1


def test_analyze_figure(tmp_path, capsys):
    out = tmp_path / "picture.svg"
    code = main(
        ["analyze", "x0^3,x1^3,x2^3,x0*x1*x2", "--figure", str(out), "--checks", "togliatti"]
    )
    capsys.readouterr()
    assert code == 0
    assert out.exists() and out.stat().st_size > 500
    assert b"<svg" in out.read_bytes()[:300]


def test_figure_bytes_deterministic(tmp_path, capsys):
    a = tmp_path / "a.svg"
    b = tmp_path / "b.svg"
    for path in (a, b):
        main(["analyze", "x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2",
              "--figure", str(path), "--checks", "togliatti"])
        capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_enumerate_csv(capsys):
    code = main(["enumerate", "--n", "2", "--d", "4", "--mu", "5", "--filter", "minimal"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,d,mu,generators"
    assert len(lines) == 3  # header + 2 orbits


def test_enumerate_budget_refusal_exits_3(capsys):
    code = main(["enumerate", "--n", "2", "--d", "5", "--mu", "7", "--budget", "10"])
    assert code == 3
    assert "budget refusal" in capsys.readouterr().err


def test_enumerate_json_stream(capsys):
    code = main(
        ["enumerate", "--n", "2", "--d", "4", "--mu", "5",
         "--filter", "minimal", "--format", "json"]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    recs = [json.loads(line) for line in lines]
    assert all(rec["n"] == 2 and rec["d"] == 4 for rec in recs)


def test_enumerate_survey_row(capsys):
    code = main(["enumerate", "--n", "2", "--d", "4", "--mu", "5", "--survey"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("n,d,mu,total")
    fields = out[1].split(",")
    assert fields[:3] == ["2", "4", "5"]


def test_enumerate_deterministic_across_threads(capsys):
    args = ["enumerate", "--n", "2", "--d", "5", "--mu", "6", "--filter", "togliatti"]
    assert main(args) == 0
    serial = capsys.readouterr().out
    assert main(args + ["--threads", "2"]) == 0
    parallel = capsys.readouterr().out
    assert serial == parallel


def test_reproduce_single_target(capsys):
    code = main(["reproduce", "certificate-f3"])
    assert code == 0
    assert "PASS  certificate-f3" in capsys.readouterr().out


def test_reproduce_unknown_target_exits_4(capsys):
    code = main(["reproduce", "no-such-thing"])
    assert code == 4
    err = capsys.readouterr().err
    assert "valid targets" in err and "certificate-ex35" in err


def test_reproduce_list(capsys):
    assert main(["reproduce", "--list"]) == 0
    names = capsys.readouterr().out.split()
    assert "stability-thm" in names and "mu-lower-n2d5" in names


def test_reproduce_cache(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("TOGLIATTI_CACHE_DIR", str(tmp_path))
    assert main(["reproduce", "certificate-f3", "--verbose"]) == 0
    capsys.readouterr()
    assert (tmp_path / "reproduce.jsonl").exists()
    assert main(["reproduce", "certificate-f3", "--verbose"]) == 0
    assert "(cached)" in capsys.readouterr().out


def test_console_entry_point():
    proc = run_cli("--version")
    assert proc.returncode == 0
    assert "togliatti" in proc.stdout
