"""CLI tests: flag layering, output files, batch mode, and exit statuses."""

import json
from pathlib import Path

from hexswarm.cli import main
from hexswarm.engine import TRACE_HEADER


def write_scenario(tmp_path: Path, text: str) -> str:
    p = tmp_path / "scenario.cfg"
    p.write_text(text)
    return str(p)


SMALL = "robots = 4\nradius = 8\nmargin = 1\ntarget = 4,0\nentry = -4,0\nmax_ticks = 60\n"


class TestSingleRun:
    def test_writes_trace_summary_and_tracker(self, tmp_path):
        scenario = write_scenario(tmp_path, SMALL)
        out = tmp_path / "run1"
        code = main(["--scenario", scenario, "--seed", "7", "--out", str(out)])
        assert code in (0, 2)
        assert (out / "trace.csv").is_file()
        assert (out / "summary.json").is_file()
        assert (out / "tracker.csv").is_file()
        header = (out / "trace.csv").read_text().splitlines()[0]
        assert header == ",".join(TRACE_HEADER)
        summary = json.loads((out / "summary.json").read_text())
        assert summary["seed"] == 7
        assert summary["robots"] == 4

    def test_repeat_runs_are_byte_identical(self, tmp_path):
        scenario = write_scenario(tmp_path, SMALL)
        outs = []
        for name in ("a", "b"):
            out = tmp_path / name
            main(["--scenario", scenario, "--seed", "7", "--out", str(out)])
            outs.append((out / "trace.csv").read_bytes())
        assert outs[0] == outs[1]

    def test_aco_run_writes_field_csv(self, tmp_path):
        scenario = write_scenario(tmp_path, SMALL + "controller = aco\n")
        out = tmp_path / "aco"
        main(["--scenario", scenario, "--out", str(out)])
        field = (out / "field.csv").read_text().splitlines()
        assert field[0] == "tick,q,r,level"

    def test_no_temp_files_left_behind(self, tmp_path):
        scenario = write_scenario(tmp_path, SMALL)
        out = tmp_path / "clean"
        main(["--scenario", scenario, "--out", str(out)])
        names = {p.name for p in out.iterdir()}
        assert names == {"trace.csv", "summary.json", "tracker.csv"}


class TestOverrideLayers:
    def test_flag_beats_config_beats_default(self, tmp_path):
        # default max_ticks is 500; config says 60; the flag says 2
        scenario = write_scenario(tmp_path, SMALL)
        out = tmp_path / "layers"
        main(["--scenario", scenario, "--ticks", "2", "--out", str(out)])
        summary = json.loads((out / "summary.json").read_text())
        assert summary["ticks"] == 2
        out2 = tmp_path / "layers2"
        main(["--scenario", scenario, "--out", str(out2)])
        summary2 = json.loads((out2 / "summary.json").read_text())
        assert summary2["ticks"] <= 60
        out3 = tmp_path / "layers3"
        main(["--seed", "1", "--ticks", "1", "--out", str(out3)])
        summary3 = json.loads((out3 / "summary.json").read_text())
        assert summary3["robots"] == 20  # defaults apply without a scenario file

    def test_controller_override(self, tmp_path):
        scenario = write_scenario(tmp_path, SMALL)
        out = tmp_path / "ctrl"
        main(["--scenario", scenario, "--controller", "bco", "--out", str(out)])
        summary = json.loads((out / "summary.json").read_text())
        assert summary["controller"] == "bco"


class TestBatch:
    def test_batch_writes_one_row_per_seed(self, tmp_path):
        scenario = write_scenario(tmp_path, SMALL)
        out = tmp_path / "batch"
        code = main(["--scenario", scenario, "--seed", "5", "--batch", "6", "--out", str(out)])
        assert code == 0
        rows = [json.loads(line) for line in (out / "summary.json").read_text().splitlines()]
        assert [row["seed"] for row in rows] == [5, 6, 7, 8, 9, 10]
        for seed in range(5, 11):
            assert (out / f"trace_{seed}.csv").is_file()


class TestExitStatuses:
    def test_missing_scenario_file_is_usage_error(self, tmp_path, capsys):
        assert main(["--scenario", str(tmp_path / "nope.cfg")]) == 1
        assert "error" in capsys.readouterr().err

    def test_bad_flag_is_usage_error(self, capsys):
        assert main(["--frobnicate"]) == 1

    def test_bad_config_value_is_usage_error(self, tmp_path, capsys):
        scenario = write_scenario(tmp_path, "robots = 0\n")
        assert main(["--scenario", scenario]) == 1

    def test_success_exit_zero(self, tmp_path):
        scenario = write_scenario(
            tmp_path, "robots = 1\nradius = 6\nmargin = 1\ntarget = 1,0\nentry = 0,0\n"
        )
        assert main(["--scenario", scenario, "--out", str(tmp_path / "s")]) == 0

    def test_timeout_exit_two(self, tmp_path):
        scenario = write_scenario(tmp_path, SMALL + "max_ticks = 3\n")
        assert main(["--scenario", scenario, "--out", str(tmp_path / "t")]) == 2

    def test_extinction_exit_three(self, tmp_path):
        # both robots die before anything can get near the target
        scenario = write_scenario(
            tmp_path, SMALL + "robots = 2\nremovals = 1:0, 2:1\n"
        )
        assert main(["--scenario", scenario, "--out", str(tmp_path / "x")]) == 3
