"""
Testes do serviço de varreduras
"""

import pytest

from config.settings import Settings
from models.base_models import RunRequest
from models.error_models import DomainError
from models.reference_data import TABLE_PHASE_SHIFTS
from services.kinematics import preset_context
from services.sweep_service import SweepService, feasible_beta_bound, sign_pattern_matches


@pytest.fixture
def service():
    return SweepService(Settings(MAX_WORKERS=2))


class TestFeasibleBound:

    def test_equal_preset(self):
        assert feasible_beta_bound(preset_context("equal", 1.0), 0.15, 20) == pytest.approx(0.049537, abs=1e-6)

    def test_unequal_preset(self):
        assert feasible_beta_bound(preset_context("unequal", 1.0), 0.15, 20) == pytest.approx(0.07568, abs=1e-5)


class TestSignPattern:

    def test_reference_matches_itself(self):
        reference = TABLE_PHASE_SHIFTS["equal"]
        assert sign_pattern_matches(reference, reference) == (0, True)

    def test_flipped_sign(self):
        reference = TABLE_PHASE_SHIFTS["equal"]
        flipped = list(reference)
        flipped[2] = -flipped[2]
        mismatches, match = sign_pattern_matches(flipped, reference)
        assert mismatches == 1
        assert not match

    def test_wrong_scale(self):
        reference = TABLE_PHASE_SHIFTS["equal"]
        halved = [value / 2 for value in reference]
        assert sign_pattern_matches(halved, reference) == (0, False)


class TestRecords:

    def test_phase_shift_rows_keep_closed_channels(self, service):
        cfg = RunRequest(preset="equal", beta=0.05, l="0..20").to_run_config()
        records = service.phase_shift_records(cfg)
        assert [r.l for r in records] == list(range(21))
        assert all(r.status == "ok" for r in records[:20])
        assert records[20].status == "evanescent_channel"
        assert records[20].delta is None

    def test_explicit_flags_override_preset(self):
        cfg = RunRequest(preset="unequal", m1=5.0, sigma=0.5).to_run_config()
        assert cfg.m1 == 5.0
        assert cfg.m2 == 1.0
        assert cfg.sigma_override == 0.5

    def test_bound_state_rows(self, service):
        cfg = RunRequest(preset="equal", beta=0.005, l="0..1", n_max=2).to_run_config()
        records = service.bound_state_records(cfg)
        keys = [(r.l, r.n) for r in records]
        assert keys == sorted(keys)
        assert (0, 0) in keys and (0, 1) in keys
        assert all(r.energy < 0.15 for r in records)


class TestScanBeta:

    def test_report_shape(self, service):
        report = service.scan_beta("equal", beta_grid=[0.02, 0.035, 0.045])
        assert report.feasible_upper_bound == pytest.approx(0.049537, abs=1e-6)
        assert report.best_beta in (0.02, 0.035, 0.045)
        assert report.best_coefficient_set in ("repaired", "printed")
        assert len(report.best_rows) == 21
        assert {e.coefficient_set for e in report.entries} <= {"repaired", "printed"}
        best = min(report.entries, key=lambda e: e.max_abs_deviation)
        assert report.best_max_abs_deviation == best.max_abs_deviation

    def test_rows_are_deviations(self, service):
        report = service.scan_beta("unequal", beta_grid=[0.05])
        for row in report.best_rows:
            assert row.deviation == pytest.approx(row.delta - row.reference)
            assert row.reference == TABLE_PHASE_SHIFTS["unequal"][row.l]

    def test_grid_above_bound(self, service):
        with pytest.raises(DomainError):
            service.scan_beta("equal", beta_grid=[0.06, 0.08])

    def test_default_grid_stays_below_bound(self, service):
        grid = service.default_beta_grid(0.05)
        assert grid.size == service.settings.BETA_SCAN_POINTS
        assert 0 < grid[0] and grid[-1] < 0.05


class TestTable:

    def test_two_columns_with_reference(self, service):
        rows = service.table_comparison(0.045)
        assert len(rows) == 21
        assert rows[2].reference_equal == TABLE_PHASE_SHIFTS["equal"][2]
        assert rows[20].reference_unequal == TABLE_PHASE_SHIFTS["unequal"][20]
        assert all(r.delta_equal is not None and r.delta_unequal is not None for r in rows)


class TestValidate:

    def test_small_grid_passes(self, service):
        report = service.validate(l_values=(0, 1), betas=(0.05,), presets=("equal",), include_exact=False)
        assert report.passed
        assert {c.name for c in report.checks} == {"phase", "ode_residual", "amplitude"}
        assert report.worst_phase_deviation < 2e-3
        assert report.max_beta_r == pytest.approx(30.0, rel=1e-2)

    def test_perturbed_coefficient_fails(self, service):
        report = service.validate(l_values=(1,), betas=(0.05,), presets=("equal",),
                                  perturb_w2=True, include_exact=False)
        assert not report.passed
        failed = {c.name for c in report.checks if not c.passed}
        assert failed == {"ode_residual"}

    def test_exact_diagnostic_is_informational(self, service):
        report = service.validate(l_values=(0,), betas=(0.05,), presets=("equal",))
        exact = [c for c in report.checks if c.name == "exact_vs_approximated"]
        assert len(exact) == 1
        assert exact[0].tolerance is None
        assert exact[0].passed

    def test_family_summary(self, service):
        report = service.validate(l_values=(0, 1), betas=(0.05,), presets=("equal",),
                                  perturb_w2=True, include_exact=False)
        summary = report.family_summary()
        assert list(summary) == ["phase", "ode_residual", "amplitude"]
        assert summary["phase"] == (True, report.worst_phase_deviation)
        assert summary["ode_residual"] == (False, report.worst_residual)
        assert summary["amplitude"][1] == report.worst_amplitude_deviation
