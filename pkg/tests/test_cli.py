"""CLI harness: schemas, formats, reproducibility, and exit codes."""

import json
import subprocess
import sys

import pytest

from coordgame import __version__
from coordgame.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestRecordEnvelope:
    def test_top_level_schema(self, capsys):
        doc = run_json(capsys, "bounds", "0.3", "0.1", "0.1", "0.1")
        assert list(doc) == ["subcommand", "version", "seed", "parameters", "results"]
        assert doc["subcommand"] == "bounds"
        assert doc["version"] == __version__
        assert doc["seed"] == 0

    def test_seed_flag_echoed(self, capsys):
        doc = run_json(capsys, "lhv", "--seed", "17")
        assert doc["seed"] == 17

    def test_csv_has_header_and_envelope_columns(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "0.3", "0.1", "0.1", "0.1", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        header = lines[0].split(",")
        assert header[:3] == ["subcommand", "version", "seed"]
        row = lines[1].split(",")
        assert row[0] == "bounds" and row[1] == __version__


class TestBoundsCommand:
    def test_construction_profile(self, capsys):
        r = run_json(capsys, "bounds", "0.3", "0.1", "0.1", "0.1")["results"]
        assert r["payoff"] == pytest.approx(3.0, abs=1e-8)
        assert r["degenerate"] is False
        assert r["classical_bound"]["holds"] is True
        assert abs(r["classical_bound"]["slack"]) < 1e-12
        assert r["quantum_bound"]["holds"] is True
        assert r["quantum_bound"]["slack"] == pytest.approx(0.6, abs=1e-8)

    def test_degenerate_profile(self, capsys):
        r = run_json(capsys, "bounds", "1", "0", "0", "0")["results"]
        assert r["degenerate"] is True
        assert r["payoff"] is None
        assert r["classical_bound"]["holds"] is False
        assert r["quantum_bound"]["holds"] is False
        assert r["quantum_bound"]["slack"] == pytest.approx(-1.0, abs=1e-12)

    def test_quantum_like_profile(self, capsys):
        r = run_json(
            capsys, "bounds", "0.0223318", "0.0024979", "0.0024979", "0.0024979"
        )["results"]
        assert r["classical_bound"]["holds"] is False
        assert r["quantum_bound"]["holds"] is True
        assert r["payoff"] == pytest.approx(8.9402, abs=1e-3)

    def test_out_of_range_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "1.5", "0", "0", "0")
        assert code == 2
        assert "outside [0, 1]" in err


class TestClassicalCommand:
    def test_small_exact_run(self, capsys):
        doc = run_json(capsys, "classical", "--N", "1000", "--rounds-per-pair", "1000")
        assert doc["parameters"] == {
            "N": 1000,
            "q": 0.1,
            "mode": "disjoint-flips",
            "rounds_per_pair": 1000,
        }
        r = doc["results"]
        assert r["analytic"]["payoff"] == pytest.approx(3.0, abs=1e-8)
        assert r["analytic"]["profile"]["q00"] == pytest.approx(0.3, abs=1e-8)
        # full-cycle block schedule makes the empirical frequencies exact
        assert r["empirical"]["profile"] == r["analytic"]["profile"]
        assert r["empirical"]["payoff"] == pytest.approx(3.0, abs=1e-8)
        assert r["empirical"]["samples_per_state_pair"] == 1000
        assert r["empirical"]["confidence_halfwidth"] > 0
        assert r["bounds"]["classical"]["holds"] is True

    def test_infeasible_flip_fraction_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "classical", "--q", "0.4")
        assert code == 2
        assert "flip" in err.lower()

    def test_bsc_mode_runs(self, capsys):
        doc = run_json(
            capsys, "classical", "--mode", "bsc-chain", "--q", "0.05",
            "--N", "20000", "--rounds-per-pair", "20000",
        )
        r = doc["results"]
        assert r["analytic"]["payoff"] == pytest.approx(2.71, abs=1e-8)
        assert abs(r["empirical"]["payoff"] - 2.71) < r["empirical"]["confidence_halfwidth"] * 3


class TestQuantumCommand:
    def test_analytic_block(self, capsys):
        doc = run_json(capsys, "quantum", "--rounds-per-pair", "2000")
        assert doc["parameters"]["delta"] == 0.1
        r = doc["results"]
        assert r["analytic"]["payoff"] == pytest.approx(8.94014982, abs=1e-6)
        assert r["bounds"]["classical"]["holds"] is False
        assert r["bounds"]["quantum"]["holds"] is True

    def test_empirical_within_reported_interval(self, capsys):
        doc = run_json(capsys, "quantum", "--delta", "0.5", "--rounds-per-pair", "20000")
        r = doc["results"]
        half = r["empirical"]["confidence_halfwidth"]
        assert abs(r["empirical"]["payoff"] - r["analytic"]["payoff"]) < 2.5 * half

    def test_delta_range_enforced(self, capsys):
        for bad in ("0", "1.1", "-0.2"):
            code, _, err = run_cli(capsys, "quantum", "--delta", bad)
            assert code == 2
            assert "delta" in err


class TestSweepCommand:
    def test_default_grid(self, capsys):
        doc = run_json(capsys, "sweep")
        rows = doc["results"]["rows"]
        assert len(rows) == 100
        assert rows[0]["delta"] == pytest.approx(0.01)
        assert rows[-1]["delta"] == pytest.approx(1.0)
        payoffs = [r["payoff_quantum"] for r in rows]
        assert payoffs[0] >= 8.999
        assert all(a > b for a, b in zip(payoffs, payoffs[1:]))
        assert all(r["classical_bound_slack"] < 0 for r in rows)

    def test_csv_row_count_and_columns(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--steps", "10", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 11
        assert lines[0] == (
            "subcommand,version,seed,delta_min,delta_max,steps,"
            "delta,q00,q01,payoff_quantum,classical_bound_slack"
        )

    def test_bad_range_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--delta-min", "0.5", "--delta-max", "0.1")
        assert code == 2


class TestLhvCommand:
    def test_summary_fields(self, capsys):
        r = run_json(capsys, "lhv")["results"]
        assert r["supremum_payoff"] == 3.0
        assert r["all_vertices_satisfy_bound"] is True
        assert len(r["vertices"]) == 16
        assert r["witness_profile"] == {"q00": 0.3, "q01": 0.1, "q10": 0.1, "q11": 0.1}
        assert r["witness_payoff"] == pytest.approx(3.0, abs=1e-8)
        assert r["witness_q"] == 0.1

    def test_vertex_rows(self, capsys):
        r = run_json(capsys, "lhv")["results"]
        first = r["vertices"][0]
        assert first == {
            "vertex_index": 0,
            "m1_state0": "A",
            "m1_state1": "A",
            "m2_state0": "A",
            "m2_state1": "A",
            "d00": 0,
            "d01": 0,
            "d10": 0,
            "d11": 0,
            "satisfies_bound": True,
            "witness_weight": 0.7,
        }
        weights = [v["witness_weight"] for v in r["vertices"]]
        assert sum(weights) == pytest.approx(1.0, abs=1e-12)

    def test_csv_has_sixteen_rows(self, capsys):
        code, out, _ = run_cli(capsys, "lhv", "--format", "csv")
        assert code == 0
        assert len(out.splitlines()) == 17


class TestMatchCommand:
    def test_default_classical_dump(self, capsys):
        doc = run_json(capsys, "match")
        rows = doc["results"]["rounds"]
        assert len(rows) == 32
        assert [r["round_index"] for r in rows] == list(range(32))
        assert {r["move_one"] for r in rows} <= {"A", "B"}
        # block schedule: first 8 rounds are state pair (0, 0)
        assert all(r["state_one"] == 0 and r["state_two"] == 0 for r in rows[:8])
        assert doc["results"]["empirical"]["payoff"] == pytest.approx(3.0, abs=1e-8)

    def test_quantum_family(self, capsys):
        doc = run_json(capsys, "match", "--strategy", "quantum", "--rounds-per-pair", "16")
        assert len(doc["results"]["rounds"]) == 64

    def test_csv_one_line_per_round(self, capsys):
        code, out, _ = run_cli(capsys, "match", "--format", "csv")
        assert code == 0
        assert len(out.splitlines()) == 33


class TestReproducibility:
    @pytest.mark.parametrize("fmt", ["json", "csv"])
    def test_identical_commands_identical_bytes(self, capsys, fmt):
        argv = ["quantum", "--rounds-per-pair", "5000", "--seed", "42", "--format", fmt]
        _, out_a, _ = run_cli(capsys, *argv)
        _, out_b, _ = run_cli(capsys, *argv)
        assert out_a == out_b

    def test_seed_changes_empirical_results(self, capsys):
        a = run_json(capsys, "quantum", "--rounds-per-pair", "5000", "--seed", "1")
        b = run_json(capsys, "quantum", "--rounds-per-pair", "5000", "--seed", "2")
        assert a["results"]["empirical"]["profile"] != b["results"]["empirical"]["profile"]
        assert a["results"]["analytic"] == b["results"]["analytic"]

    def test_out_file_matches_stdout(self, capsys, tmp_path):
        path = tmp_path / "record.csv"
        _, out, _ = run_cli(capsys, "lhv", "--format", "csv")
        code, empty, _ = run_cli(capsys, "lhv", "--format", "csv", "--out", str(path))
        assert code == 0 and empty == ""
        assert path.read_text(encoding="utf-8") == out

    def test_nine_significant_digit_floats(self, capsys):
        code, out, _ = run_cli(capsys, "quantum", "--rounds-per-pair", "100", "--format", "csv")
        assert code == 0
        assert "8.94014982" in out  # analytic payoff at delta 0.1, 9 significant digits


class TestEntryPoint:
    def test_console_script_help(self):
        proc = subprocess.run(
            [sys.executable, "-m", "coordgame.cli", "--help"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        for name in ("classical", "quantum", "sweep", "lhv", "bounds", "match"):
            assert name in proc.stdout

    def test_missing_subcommand_exits_two(self):
        proc = subprocess.run(
            [sys.executable, "-m", "coordgame.cli"], capture_output=True, text=True
        )
        assert proc.returncode == 2
