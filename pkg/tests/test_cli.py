"""Command-line interface: subcommands, formats, determinism, exit codes."""

import csv
import json
import math

import pytest

from lejacircle.cli import main


def run_cli(args):
    return main(args)


class TestSequence:
    def test_structural_eight(self, tmp_path, capsys):
        out = tmp_path / "seq.csv"
        assert run_cli(["sequence", "--structural", "--n", "8", "--s", "1", "--out", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 8
        angles = [float(r["angle_turns"]) for r in rows]
        assert angles == [0.0, 0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875]
        assert rows[0]["extremal_value"] == ""
        assert float(rows[1]["extremal_value"]) == pytest.approx(0.5)

    def test_numerical_monotone_from_p1(self, tmp_path):
        out = tmp_path / "run.csv"
        code = run_cli([
            "sequence", "--numerical", "--s", "0.5", "--initial", "0,0.1,0.37",
            "--n", "48", "--grid", "256", "--out", str(out),
        ])
        assert code == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 48
        vals = [float(r["extremal_value"]) for r in rows[3:]]
        assert all(b >= a - 1e-10 for a, b in zip(vals, vals[1:]))

    def test_rejects_zero(self):
        assert run_cli(["sequence", "--n", "0"]) == 2

    def test_rejects_bad_initial(self):
        assert run_cli(["sequence", "--numerical", "--initial", "0,1.5", "--n", "4"]) == 2
        assert run_cli(["sequence", "--numerical", "--initial", "0.2,0.2", "--n", "4"]) == 2

    def test_budget_exit(self):
        assert run_cli(["sequence", "--structural", "--n", str((1 << 20) + 2)]) == 3

    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["sequence", "--numerical", "--s", "0.5", "--initial", "0,0.1,0.37",
                "--n", "24", "--grid", "256"]
        run_cli(args + ["--out", str(a)])
        run_cli(args + ["--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_floats_round_trip(self, tmp_path):
        out = tmp_path / "seq.csv"
        run_cli(["sequence", "--structural", "--n", "32", "--s", "1.5", "--out", str(out)])
        for row in csv.DictReader(out.open()):
            if row["extremal_value"]:
                v = float(row["extremal_value"])
                assert f"{v:.17g}" == row["extremal_value"]


class TestConstants:
    def test_s2(self, capsys):
        assert run_cli(["constants", "--s", "2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["limsup"] == pytest.approx(0.25, rel=1e-13)

    def test_s1(self, capsys):
        assert run_cli(["constants", "--s", "1"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["first_order"] == pytest.approx(1.0 / math.pi, rel=1e-14)

    def test_s0(self, capsys):
        assert run_cli(["constants", "--s", "0"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["i_sigma"] == 0.0

    def test_stable_key_order(self, capsys):
        run_cli(["constants", "--s", "0.5"])
        payload = json.loads(capsys.readouterr().out)
        assert list(payload.keys()) == [
            "s", "regime", "i_sigma", "zeta", "first_order",
            "limsup", "liminf_lower", "liminf_upper",
        ]


class TestTheta:
    def test_csv(self, tmp_path):
        out = tmp_path / "theta.csv"
        assert run_cli(["theta", "--p", "3", "--max-bits", "3", "--format", "csv",
                        "--s", "0.5", "--out", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert [r["M"] for r in rows] == ["1", "3", "5", "7"]
        assert rows[1]["components"] == "2/3|1/3|0"

    def test_json_search(self, capsys):
        assert run_cli(["theta", "--p", "8", "--max-bits", "8", "--s", "2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["g_search"]["inf_found"] <= 0.34
        assert payload["lambda_search"]["inf_found"] <= -1.2


class TestFigure:
    def test_fig1_exact_ones(self, tmp_path, capsys):
        assert run_cli(["figure", "--id", "1", "--out-dir", str(tmp_path)]) == 0
        rows = list(csv.DictReader((tmp_path / "fig1.csv").open()))
        assert len(rows) == 5000
        assert rows[1022]["N"] == "1023" and rows[1022]["value"] == "1"
        assert rows[4094]["N"] == "4095" and rows[4094]["value"] == "1"

    def test_fig2_negative(self, tmp_path):
        assert run_cli(["figure", "--id", "2", "--out-dir", str(tmp_path)]) == 0
        names = sorted(p.name for p in tmp_path.glob("fig2_*.csv"))
        assert names == [
            "fig2_s0.001.csv", "fig2_s0.1.csv", "fig2_s0.3.csv",
            "fig2_s0.5.csv", "fig2_s0.7.csv", "fig2_s0.99.csv",
        ]
        for name in names:
            vals = [float(r["value"]) for r in csv.DictReader((tmp_path / name).open())]
            assert len(vals) == 2048
            assert all(v < 0.0 for v in vals)

    def test_fig4_positive(self, tmp_path):
        assert run_cli(["figure", "--id", "4", "--out-dir", str(tmp_path)]) == 0
        for s in ("1.005", "1.5", "3.5", "5"):
            vals = [float(r["value"]) for r in csv.DictReader((tmp_path / f"fig4_s{s}.csv").open())]
            assert len(vals) == 2048
            assert all(v > 0.0 for v in vals)

    def test_unknown_id(self):
        assert run_cli(["figure", "--id", "9"]) == 2


class TestSeries:
    def test_csv(self, tmp_path):
        out = tmp_path / "t.csv"
        assert run_cli(["series", "--kind", "T_critical", "--s", "1", "--n-max", "64",
                        "--out", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert rows[0]["N"] == "1"
        assert len(rows) == 64

    def test_regime_mismatch(self):
        assert run_cli(["series", "--kind", "W_subcritical", "--s", "2", "--n-max", "64"]) == 2


class TestVerify:
    def test_small_pass(self, capsys):
        assert run_cli(["verify", "--n-max", "64", "--s", "2"]) == 0
        out = capsys.readouterr().out
        assert "all checks passed" in out
        assert "[FAIL]" not in out

    def test_s2_exactness_line(self, capsys):
        run_cli(["verify", "--n-max", "64", "--s", "2"])
        out = capsys.readouterr().out
        line = next(l for l in out.splitlines() if "supercritical-quarter" in l)
        assert "[PASS]" in line

    def test_subcritical_flag_mismatch(self):
        assert run_cli(["verify", "--s", "1.0", "--include-subcritical"]) == 2

    def test_budget_exit(self):
        assert run_cli(["verify", "--n-max", str((1 << 20) + 1)]) == 3

    def test_json_report(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        run_cli(["verify", "--n-max", "64", "--s", "2", "--json-out", str(out)])
        payload = json.loads(out.read_text())
        assert payload["all_pass"] is True
