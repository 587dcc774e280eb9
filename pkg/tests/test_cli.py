"""End-to-end tests of the command-line front end, run in-process."""

import json
import math

import numpy as np
import pytest

from conftest import run_cli, write_document
from diskinterp import PointSequence, cli


@pytest.fixture
def pair_doc(tmp_path):
    return write_document(tmp_path / "pair.json", [0.0, 0.5], label="pair")


@pytest.fixture
def radial_doc(tmp_path):
    pts = [1 - 0.5 ** n for n in range(1, 7)]
    return write_document(tmp_path / "radial.json", pts, label="radial")


def read_json(path):
    return json.loads(path.read_text())


class TestDocumentLayer:
    def test_round_trip_is_bit_exact(self):
        seq = PointSequence((0.1 + 0.2j, -0.3, 0.7j), label="t")
        doc = cli.sequence_to_document(seq)
        back = cli.parse_point_document(json.loads(json.dumps(doc)))
        assert np.array_equal(back.points, seq.points)
        assert back.label == seq.label

    def test_rejects_wrong_schema(self):
        with pytest.raises(cli.DomainError, match="schema_version"):
            cli.parse_point_document({"schema_version": 2, "points": []})

    def test_rejects_empty_points(self):
        with pytest.raises(cli.DomainError, match="points"):
            cli.parse_point_document({"schema_version": 1, "points": []})

    def test_names_offending_index(self):
        doc = {"schema_version": 1, "points": [{"re": 0.0, "im": 0.0}, {"re": "x", "im": 0}]}
        with pytest.raises(cli.DomainError, match="point 1"):
            cli.parse_point_document(doc)

    def test_float_formatting_survives_parse(self):
        x = 1 / 3
        assert float(cli._fmt_float(x)) == x

    def test_nan_serializes_as_null(self):
        assert cli._fmt_float(math.nan) == "null"


class TestRunConfig:
    def test_defaults(self):
        cfg = cli.RunConfig()
        assert cfg.grid_resolution == 128
        assert cfg.boundary_grid == 4096

    def test_rejects_out_of_range_resolution(self):
        with pytest.raises(cli.UsageError):
            cli.RunConfig(grid_resolution=16)
        with pytest.raises(cli.UsageError):
            cli.RunConfig(boundary_grid=10_000)

    def test_rejects_nonpositive_tolerance(self):
        with pytest.raises(cli.UsageError):
            cli.RunConfig(psd_tol=0.0)

    def test_precedence_flags_over_file_over_defaults(self, tmp_path, pair_doc):
        cfg_file = tmp_path / "cfg.json"
        cfg_file.write_text(json.dumps({"grid_resolution": 64}))
        out = tmp_path / "out.json"
        code = run_cli([
            "decompose", pair_doc, "--config", str(cfg_file),
            "--grid-resolution", "48", "--output", str(out),
        ])
        assert code == 0
        assert read_json(out)["fit_grid_resolution"] == 48

    def test_config_file_applies_without_flags(self, tmp_path, pair_doc):
        cfg_file = tmp_path / "cfg.json"
        cfg_file.write_text(json.dumps({"grid_resolution": 64}))
        out = tmp_path / "out.json"
        code = run_cli([
            "decompose", pair_doc, "--config", str(cfg_file), "--output", str(out),
        ])
        assert code == 0
        assert read_json(out)["fit_grid_resolution"] == 64

    def test_unknown_config_key_is_usage_error(self, tmp_path, pair_doc):
        cfg_file = tmp_path / "cfg.json"
        cfg_file.write_text(json.dumps({"resolution": 64}))
        assert run_cli(["decompose", pair_doc, "--config", str(cfg_file)]) == 64


class TestAnalyze:
    def test_pair_constants(self, tmp_path, pair_doc):
        out = tmp_path / "report.json"
        assert run_cli(["analyze", pair_doc, "--output", str(out)]) == 0
        report = read_json(out)
        assert report["separation_constant"] == pytest.approx(0.5)
        assert report["carleson_constant"] == pytest.approx(0.5)
        assert [p["index"] for p in report["per_point"]] == [0, 1]

    def test_empty_points_exits_domain(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"schema_version": 1, "points": []}))
        assert run_cli(["analyze", str(bad)]) == 1

    def test_duplicate_point_names_index(self, tmp_path, capsys):
        bad = tmp_path / "dup.json"
        bad.write_text(json.dumps({
            "schema_version": 1,
            "points": [{"re": 0.5, "im": 0.0}, {"re": 0.5, "im": 0.0}],
        }))
        assert run_cli(["analyze", str(bad)]) == 1
        assert "0 and 1" in capsys.readouterr().err

    def test_missing_file_exits_domain(self):
        assert run_cli(["analyze", "/nonexistent/points.json"]) == 1

    def test_determinism_byte_identical(self, tmp_path, radial_doc):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert run_cli(["analyze", radial_doc, "--output", str(out1)]) == 0
        assert run_cli(["analyze", radial_doc, "--output", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()


class TestDecompose:
    def test_default_delta_is_half_separation(self, tmp_path, pair_doc):
        out = tmp_path / "dec.json"
        assert run_cli(["decompose", pair_doc, "--output", str(out)]) == 0
        dec = read_json(out)
        assert dec["delta"] == pytest.approx(0.25)
        assert sorted(dec["part0"] + dec["part1"]) == [0, 1]

    def test_explicit_delta_overrides(self, tmp_path, pair_doc):
        out = tmp_path / "dec.json"
        code = run_cli(["decompose", pair_doc, "--delta", "0.1", "--output", str(out)])
        assert code == 0
        assert read_json(out)["delta"] == pytest.approx(0.1)

    def test_singleton_is_domain_error(self, tmp_path):
        doc = write_document(tmp_path / "one.json", [0.5])
        assert run_cli(["decompose", str(doc)]) == 1


class TestInterpolate:
    def test_pair_zero_one(self, tmp_path, pair_doc):
        out = tmp_path / "sol.json"
        code = run_cli([
            "interpolate", pair_doc, "--targets", "0,1", "--output", str(out),
        ])
        assert code == 0
        sol = read_json(out)
        assert sol["min_norm"] == pytest.approx(2.0, rel=1e-6)
        assert sol["max_abs_residual"] <= 1e-8
        assert len(sol["schur_parameters"]) == 2

    def test_single_node_constant(self, tmp_path):
        doc = write_document(tmp_path / "one.json", [0.0])
        out = tmp_path / "sol.json"
        code = run_cli([
            "interpolate", str(doc), "--targets", "1", "--output", str(out),
        ])
        assert code == 0
        assert read_json(out)["min_norm"] == pytest.approx(1.0, rel=1e-7)

    def test_mismatched_targets_usage_error(self, pair_doc):
        assert run_cli(["interpolate", pair_doc, "--targets", "0,1,2"]) == 64

    def test_unparseable_targets_usage_error(self, pair_doc):
        assert run_cli(["interpolate", pair_doc, "--targets", "0,spam"]) == 64

    def test_boundary_csv(self, tmp_path, pair_doc):
        out = tmp_path / "sol.json"
        csv = tmp_path / "boundary.csv"
        code = run_cli([
            "interpolate", pair_doc, "--targets", "0,1",
            "--boundary-grid", "64", "--output", str(out),
            "--boundary-csv", str(csv),
        ])
        assert code == 0
        lines = csv.read_text().strip().splitlines()
        assert lines[0] == "theta,re,im,modulus"
        assert len(lines) == 1 + 64
        moduli = [float(line.split(",")[3]) for line in lines[1:]]
        assert max(moduli) <= 2.0 * (1 + 1e-6)


class TestVerifyTheorem:
    def test_pair_passes(self, tmp_path, pair_doc):
        out = tmp_path / "chain.json"
        code = run_cli([
            "verify-theorem", pair_doc, "--grid-resolution", "64",
            "--output", str(out),
        ])
        assert code == 0
        report = read_json(out)
        assert report["hypothesis_ok"] is True
        assert report["c"] == pytest.approx(2.0, rel=2e-4)
        assert report["step_a"][0]["passed"] is True

    def test_radial_exits_zero(self, tmp_path, radial_doc):
        out = tmp_path / "chain.json"
        code = run_cli([
            "verify-theorem", radial_doc, "--grid-resolution", "64",
            "--output", str(out),
        ])
        assert code == 0
        assert read_json(out)["hard_steps_pass"] is True

    def test_non_separated_exits_one_with_null_constants(self, tmp_path):
        gen = tmp_path / "ce.json"
        code = run_cli([
            "counterexample", "--pairs", "2", "--gap", "1e-7", "--ratio", "0.5",
            "--grid-resolution", "64", "--output", str(gen),
        ])
        assert code == 0
        doc = read_json(gen)["runs"][0]["document"]
        points = tmp_path / "cepts.json"
        points.write_text(json.dumps(doc))
        out = tmp_path / "chain.json"
        code = run_cli([
            "verify-theorem", str(points), "--grid-resolution", "64",
            "--output", str(out),
        ])
        assert code == 1
        report = read_json(out)
        assert report["hypothesis_ok"] is False
        assert report["c"] is None
        assert report["step_a"] == []

    def test_determinism_byte_identical(self, tmp_path, radial_doc):
        out1, out2 = tmp_path / "c1.json", tmp_path / "c2.json"
        argv = ["verify-theorem", radial_doc, "--grid-resolution", "64"]
        assert run_cli(argv + ["--output", str(out1)]) == 0
        assert run_cli(argv + ["--output", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()


class TestCounterexample:
    def test_summary_separation_below_gap(self, tmp_path):
        out = tmp_path / "ce.json"
        code = run_cli([
            "counterexample", "--pairs", "2", "--gap", "0.01", "--ratio", "0.5",
            "--grid-resolution", "64", "--output", str(out),
        ])
        assert code == 0
        runs = read_json(out)["runs"]
        assert len(runs) == 1
        assert runs[0]["summary"]["separation_constant"] <= 0.01

    def test_gap_sweep_emits_one_run_per_gap(self, tmp_path):
        out = tmp_path / "ce.json"
        code = run_cli([
            "counterexample", "--pairs", "2", "--gap", "0.1", "0.01", "--ratio",
            "0.5", "--grid-resolution", "64", "--output", str(out),
        ])
        assert code == 0
        runs = read_json(out)["runs"]
        assert [r["gap"] for r in runs] == [0.1, 0.01]

    def test_wide_gap_still_bounded(self, tmp_path):
        out = tmp_path / "ce.json"
        code = run_cli([
            "counterexample", "--pairs", "2", "--gap", "0.2", "--ratio", "0.5",
            "--grid-resolution", "64", "--output", str(out),
        ])
        assert code == 0
        summary = read_json(out)["runs"][0]["summary"]
        assert summary["separation_constant"] <= 0.2

    def test_document_round_trips(self, tmp_path):
        out = tmp_path / "ce.json"
        run_cli([
            "counterexample", "--pairs", "3", "--gap", "0.05", "--ratio", "0.5",
            "--grid-resolution", "64", "--output", str(out),
        ])
        doc = read_json(out)["runs"][0]["document"]
        seq = cli.parse_point_document(doc)
        assert len(seq) == 6

    def test_guard_violation_is_domain_error(self, tmp_path):
        code = run_cli([
            "counterexample", "--pairs", "40", "--gap", "0.01", "--ratio", "0.5",
            "--grid-resolution", "64", "--output", str(tmp_path / "x.json"),
        ])
        assert code == 1


class TestField:
    def test_singleton_field_is_log_abs(self, tmp_path):
        doc = write_document(tmp_path / "zero.json", [0.0])
        out = tmp_path / "field.csv"
        code = run_cli([
            "field", str(doc), "--grid-resolution", "33", "--output", str(out),
        ])
        assert code == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "x,y,log_modulus"
        nan_rows = 0
        for line in lines[1:]:
            x, y, v = line.split(",")
            z = complex(float(x), float(y))
            if v == "nan":
                nan_rows += 1
                assert abs(z) < 1e-6
            else:
                assert float(v) == pytest.approx(math.log(abs(z)), rel=1e-12)
        # Odd resolution puts one exact grid point on the zero itself.
        assert nan_rows == 1

    def test_row_count_matches_interior_filter(self, tmp_path):
        doc = write_document(tmp_path / "zero.json", [0.0])
        out = tmp_path / "field.csv"
        run_cli(["field", str(doc), "--grid-resolution", "32", "--output", str(out)])
        xs = np.linspace(-0.999, 0.999, 32)
        X, Y = np.meshgrid(xs, xs)
        expected = int(np.sum(np.abs(X + 1j * Y) < 0.999))
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 1 + expected

    def test_split_products_multiply_back(self, tmp_path, pair_doc):
        # log|B0| + log|B1| = log|B| cell by cell on the shared grid.
        outs = {}
        for which in ("B", "B0", "B1"):
            path = tmp_path / f"{which}.csv"
            code = run_cli([
                "field", pair_doc, "--which", which,
                "--grid-resolution", "32", "--output", str(path),
            ])
            assert code == 0
            outs[which] = path.read_text().strip().splitlines()[1:]
        for row_b, row_0, row_1 in zip(outs["B"], outs["B0"], outs["B1"]):
            v_b, v_0, v_1 = (r.split(",")[2] for r in (row_b, row_0, row_1))
            if "nan" in (v_b, v_0, v_1):
                continue
            assert float(v_b) == pytest.approx(float(v_0) + float(v_1), abs=1e-10)


class TestUsageErrors:
    def test_unknown_command(self):
        assert run_cli(["frobnicate"]) == 64

    def test_unknown_flag(self, pair_doc):
        assert run_cli(["analyze", pair_doc, "--bogus"]) == 64

    def test_out_of_range_resolution_flag(self, pair_doc):
        assert run_cli(["analyze", pair_doc, "--grid-resolution", "16"]) == 64

    def test_numerical_breakdown_exits_two(self, pair_doc, monkeypatch):
        def blow_up(args, cfg):
            raise cli.NumericalError("synthetic breakdown")

        monkeypatch.setattr(cli, "cmd_analyze", blow_up)
        assert run_cli(["analyze", pair_doc]) == 2
