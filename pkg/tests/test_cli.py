"""Command-line entry points: outputs land on disk, exit codes track checks."""

import json

import pytest

from dbmtri import cli


def test_parser_defaults_and_required_flags():
    parser = cli.build_parser()
    args = parser.parse_args(["simulate-entries", "--n", "30", "--j", "2", "--samples", "50"])
    assert args.n == 30 and args.j == 2 and args.samples == 50
    assert args.beta == 1 and args.seed == 0
    with pytest.raises(SystemExit):
        parser.parse_args(["simulate-entries", "--n", "30"])  # --j is required
    # fully defaulted subcommands parse bare
    assert parser.parse_args(["moment-check"]).k == 4
    assert parser.parse_args(["verify-combinatorics"]).command == "verify-combinatorics"
    multi = parser.parse_args(["kurtosis", "--n", "5", "40", "320", "--j", "3"])
    assert multi.n == [5, 40, 320]


def test_verify_combinatorics_runs_clean(tmp_path, capsys):
    rc = cli.main(["verify-combinatorics", "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "[pass] noncrossing_catalan_counts" in out
    doc = json.loads((tmp_path / "verify-combinatorics_summary.json").read_text())
    assert all(c["pass"] for c in doc["checks"])
    # nothing to plot, so no csv alongside the summary
    assert not list(tmp_path.glob("*.csv"))


def test_simulate_entries_writes_curves(tmp_path):
    rc = cli.main(
        [
            "simulate-entries",
            "--n", "25",
            "--j", "2",
            "--t-max", "0.05",
            "--dt", "0.05",
            "--samples", "60",
            "--seed", "5",
            "--out", str(tmp_path),
        ]
    )
    assert rc == 0
    csv = tmp_path / "simulate-entries.csv"
    assert csv.exists()
    lines = csv.read_text().splitlines()
    assert lines[1] == "t,value,stderr,series"
    doc = json.loads((tmp_path / "simulate-entries_summary.json").read_text())
    assert doc["config"]["n"] == 25


def test_cli_reruns_are_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    argv = ["moment-check", "--n", "20", "--k", "2", "--samples", "40", "--seed", "3"]
    assert cli.main(argv + ["--out", str(a)]) == 0
    assert cli.main(argv + ["--out", str(b)]) == 0
    assert (a / "moment-check.csv").read_bytes() == (b / "moment-check.csv").read_bytes()
    sa = json.loads((a / "moment-check_summary.json").read_text())
    sb = json.loads((b / "moment-check_summary.json").read_text())
    del sa["wall_time_s"], sb["wall_time_s"]
    assert sa == sb


def test_exit_code_follows_failed_checks(tmp_path, monkeypatch, capsys):
    from dbmtri.experiments import Check, ExperimentResult

    def fake(args):
        return ExperimentResult(
            name="verify-combinatorics",
            config={},
            curves=[],
            checks=[Check("broken", False, "synthetic failure")],
        )

    monkeypatch.setattr(cli, "_run", fake)
    rc = cli.main(["verify-combinatorics", "--out", str(tmp_path)])
    assert rc == 1
    assert "[FAIL] broken" in capsys.readouterr().out


def test_sequential_flag_forces_single_thread(tmp_path):
    rc = cli.main(
        [
            "simulate-entries",
            "--n", "20",
            "--j", "1",
            "--t-max", "0.0",
            "--dt", "0.05",
            "--samples", "30",
            "--sequential",
            "--out", str(tmp_path),
        ]
    )
    assert rc == 0


def test_unknown_subcommand_rejected():
    with pytest.raises(SystemExit):
        cli.build_parser().parse_args(["no-such-command"])
