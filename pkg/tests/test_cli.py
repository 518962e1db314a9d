"""
Testes da interface de linha de comando
"""

import csv
import io
import json

import pytest

from cli import build_parser, main
from models.base_models import Channel, VarshniParams
from services.kinematics import preset_context
from services.scattering import phase_shift


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPhaseShiftCommand:

    def test_table_range_gives_one_row_per_channel(self, capsys):
        code, out, _ = _run(capsys, "phase-shift", "--m1", "1", "--m2", "1", "--a", "0.15", "--b", "0.15",
                            "--beta", "0.05", "--energy", "1", "--l", "0..20")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0].startswith("l,k,delta,normalization,lambda")
        assert len(lines) == 22

    def test_json_output(self, capsys):
        code, out, _ = _run(capsys, "phase-shift", "--preset", "equal", "--l", "0..2", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert [row["l"] for row in data] == [0, 1, 2]
        assert all(row["status"] == "ok" for row in data)

    def test_identical_runs_identical_bytes(self, capsys):
        _, first, _ = _run(capsys, "phase-shift", "--preset", "unequal", "--l", "0..5")
        _, second, _ = _run(capsys, "phase-shift", "--preset", "unequal", "--l", "0..5")
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "delta.csv"
        code, out, _ = _run(capsys, "phase-shift", "--preset", "equal", "--l", "0..3", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_bytes().count(b"\n") == 5
        assert b"\r" not in target.read_bytes()


class TestOtherCommands:

    def test_bound_states(self, capsys):
        code, out, _ = _run(capsys, "bound-states", "--preset", "equal", "--beta", "0.005", "--n-max", "1")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "n,l,E,residual"
        assert len(lines) == 3

    def test_scan_beta_json(self, capsys):
        code, out, _ = _run(capsys, "scan-beta", "--preset", "equal", "--beta", "0.03", "0.045", "--format", "json")
        report = json.loads(out)
        assert code == 0
        assert report["best_beta"] in (0.03, 0.045)
        assert len(report["best_rows"]) == 21

    def test_table(self, capsys):
        code, out, _ = _run(capsys, "table", "--beta", "0.045", "--l", "0..4")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "l,delta_equal,delta_unequal,reference_equal,reference_unequal"
        assert len(lines) == 6

    def test_validate_passes(self, capsys):
        code, _, _ = _run(capsys, "validate", "--l", "0", "--beta", "0.05", "--no-exact")
        assert code == 0

    def test_validate_perturbed_fails(self, capsys):
        code, _, _ = _run(capsys, "validate", "--l", "1", "--beta", "0.05", "--no-exact", "--perturb-w2")
        assert code == 3

    def test_validate_csv_summary_on_stderr(self, capsys):
        code, out, err = _run(capsys, "validate", "--l", "0", "--beta", "0.05", "--no-exact")
        assert code == 0
        assert out.startswith("name,preset,beta,l,value,tolerance,passed")
        for family in ("phase", "ode_residual", "amplitude"):
            assert f"{family} - PASS - pior desvio:" in err
        assert "Maior βr nas grades integradas:" in err

    def test_validate_failure_names_family(self, capsys):
        code, _, err = _run(capsys, "validate", "--l", "1", "--beta", "0.05", "--no-exact", "--perturb-w2")
        assert code == 3
        assert "ode_residual - FAIL" in err
        assert "phase - PASS" in err


class TestExitCodes:

    def test_unknown_flag_is_usage_error(self, capsys):
        code, out, err = _run(capsys, "phase-shift", "--bogus")
        assert code == 1
        assert out == ""
        assert "erro" in err

    def test_missing_command(self, capsys):
        assert _run(capsys)[0] == 1

    def test_bad_channel_spec(self, capsys):
        assert _run(capsys, "phase-shift", "--l", "5..2")[0] == 1

    def test_negative_mass_is_domain_error(self, capsys):
        assert _run(capsys, "phase-shift", "--m1", "-1")[0] == 2

    def test_negative_beta_is_domain_error(self, capsys):
        assert _run(capsys, "phase-shift", "--beta", "-0.05")[0] == 2

    def test_unknown_preset(self, capsys):
        assert _run(capsys, "phase-shift", "--preset", "heavy")[0] == 1


def test_parser_lists_subcommands():
    help_text = build_parser().format_help()
    for command in ("phase-shift", "scan-beta", "bound-states", "validate", "table"):
        assert command in help_text


def test_csv_values_recompute_to_twelve_digits(capsys):
    _, out, _ = _run(capsys, "phase-shift", "--preset", "unequal", "--beta", "0.03", "--l", "0..20")
    ctx = preset_context("unequal", 1.0)
    p = VarshniParams(a=0.15, b=0.15, beta=0.03)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 21
    for row in rows:
        result = phase_shift(ctx, p, Channel(l=int(row["l"])))
        assert float(row["delta"]) == pytest.approx(result.delta, rel=1e-11)
        assert float(row["k"]) == pytest.approx(result.k, rel=1e-11)
        assert float(row["normalization"]) == pytest.approx(result.normalization, rel=1e-11)
        assert float(row["lambda"]) == pytest.approx(result.lam, rel=1e-11)
