"""
Testes do oráculo numérico contra o resultado analítico
"""

import math

import numpy as np
import pytest

from models.base_models import (
    Channel,
    IntegrationConfig,
    PotentialMode,
    RadialSolution,
    SolutionSource,
    TwoBodyMasses,
    VarshniParams,
)
from models.error_models import AsymptoticRegimeError, ConfigError
from models.reference_data import TABLE_A, TABLE_B, TABLE_ENERGY
from services.bound_states import solve_bound_energy
from services.kinematics import context_for, preset_context
from services.oracle import (
    certification_bands,
    certify_coefficients,
    extract_phase,
    fit_amplitude,
    integrate_radial,
    ode_residual,
    oracle_wave_number,
    shoot_bound_energy,
)
from services.scattering import modulo_pi, phase_shift, radial_wavefunction, w_coefficients, wave_number


def _phase_error(ctx, p, l, max_step=0.05):
    channel = Channel(l=l)
    analytic = phase_shift(ctx, p, channel)
    sol = integrate_radial(ctx, p, channel, IntegrationConfig(max_step=max_step))
    return abs(modulo_pi(analytic.delta - extract_phase(sol, analytic.k, channel)))


class TestNumerov:

    @pytest.mark.parametrize("preset", ["equal", "unequal"])
    @pytest.mark.parametrize("beta", [0.01, 0.025, 0.05])
    @pytest.mark.parametrize("l", range(6))
    def test_phase_agrees_with_analytic(self, preset, beta, l):
        ctx = preset_context(preset, TABLE_ENERGY)
        p = VarshniParams(a=TABLE_A, b=TABLE_B, beta=beta)
        assert _phase_error(ctx, p, l) < 2e-3

    def test_s_wave_start_is_regular(self, equal_ctx, table_params):
        # primeiro ponto a um passo da origem, fora da região h²|Q|/12 ≫ 1
        sol = integrate_radial(equal_ctx, table_params, Channel(l=0))
        h = sol.r_grid[1] - sol.r_grid[0]
        assert sol.r_grid[0] == pytest.approx(h)
        assert _phase_error(equal_ctx, table_params, 0, max_step=0.01) < 1e-5

    def test_matches_analytic_wavefunction_up_to_scale(self, equal_ctx, table_params):
        for l in (0, 2):
            channel = Channel(l=l)
            sol = integrate_radial(equal_ctx, table_params, channel)
            r = sol.r_grid[sol.r_grid <= 100.0][::4]
            numeric = sol.psi[sol.r_grid <= 100.0][::4]
            analytic = radial_wavefunction(equal_ctx, table_params, channel, r).psi
            scale = np.vdot(numeric, analytic) / np.vdot(numeric, numeric)
            deviation = np.max(np.abs(analytic - scale * numeric)) / np.max(np.abs(analytic))
            assert deviation < 1e-4

    def test_error_shrinks_with_step(self, equal_ctx, table_params):
        coarse = _phase_error(equal_ctx, table_params, 0, max_step=0.2)
        fine = _phase_error(equal_ctx, table_params, 0, max_step=0.1)
        assert coarse < 0.05
        assert coarse > 4 * fine

    def test_solution_is_normalized_to_peak(self, equal_ctx, table_params):
        sol = integrate_radial(equal_ctx, table_params, Channel(l=1))
        assert sol.source == SolutionSource.ORACLE.value
        assert np.max(np.abs(sol.psi)) == pytest.approx(1.0)

    def test_exact_mode_uses_unshifted_wave_number(self, equal_ctx, table_params):
        channel = Channel(l=3)
        exact = oracle_wave_number(equal_ctx, table_params, channel, PotentialMode.EXACT)
        approx = oracle_wave_number(equal_ctx, table_params, channel)
        assert exact ** 2 - approx ** 2 == pytest.approx(12 * 0.05 ** 2)

    def test_exact_mode_integrates(self, equal_ctx, table_params):
        channel = Channel(l=1)
        cfg = IntegrationConfig(mode=PotentialMode.EXACT)
        sol = integrate_radial(equal_ctx, table_params, channel, cfg)
        k = oracle_wave_number(equal_ctx, table_params, channel, PotentialMode.EXACT)
        assert -math.pi / 2 < extract_phase(sol, k, channel) <= math.pi / 2

    def test_interval_too_short(self, equal_ctx, table_params):
        cfg = IntegrationConfig(r_min=1.0, r_max=1.01, max_step=0.4)
        with pytest.raises(ConfigError):
            integrate_radial(equal_ctx, table_params, Channel(l=0), cfg)


class TestPhaseExtraction:

    def test_pure_sine(self):
        k = 1.3
        r = np.linspace(100.0, 200.0, 4000)
        sol = RadialSolution(r_grid=r, psi=np.sin(k * r + 0.4 - math.pi / 2), source=SolutionSource.ORACLE)
        assert extract_phase(sol, k, Channel(l=1), fit_window=0.5) == pytest.approx(0.4, abs=1e-10)

    def test_reduction_to_half_open_interval(self):
        k = 1.0
        r = np.linspace(10.0, 60.0, 3000)
        sol = RadialSolution(r_grid=r, psi=-np.sin(k * r + 2.0), source=SolutionSource.ORACLE)
        assert extract_phase(sol, k, Channel(l=0)) == pytest.approx(2.0 - math.pi, abs=1e-10)

    def test_rejects_non_asymptotic_tail(self):
        r = np.linspace(1.0, 50.0, 2000)
        sol = RadialSolution(r_grid=r, psi=np.exp(-0.1 * r) * np.sin(r), source=SolutionSource.ORACLE)
        with pytest.raises(AsymptoticRegimeError):
            extract_phase(sol, 1.0, Channel(l=0), fit_window=0.9)

    def test_amplitude_of_analytic_tail_is_two(self, equal_ctx, table_params):
        channel = Channel(l=2)
        k = wave_number(equal_ctx, table_params, channel)
        start = 25.0 / table_params.beta
        r = np.linspace(start, start + 40.0 * math.pi / k, 800)
        sol = radial_wavefunction(equal_ctx, table_params, channel, r)
        assert fit_amplitude(sol, k) == pytest.approx(2.0, abs=1e-3)


class TestResidualCertification:

    def test_bands(self):
        near, far = certification_bands(0.05, 1.0)
        assert near[0] == pytest.approx(0.2)
        assert near[-1] < 3.0
        assert 1.0 - math.exp(-0.05 * far[0]) == pytest.approx(0.55, abs=1e-3)
        assert 1.0 - math.exp(-0.05 * far[-1]) <= 0.9

    @pytest.mark.parametrize("l", [0, 1, 3])
    def test_repaired_coefficients_certified(self, equal_ctx, table_params, l):
        assert certify_coefficients(equal_ctx, table_params, Channel(l=l)) < 1e-6

    def test_unequal_masses_certified(self, unequal_ctx, table_params):
        assert certify_coefficients(unequal_ctx, table_params, Channel(l=1)) < 1e-6

    def test_perturbed_coefficient_detected(self, equal_ctx, table_params):
        channel = Channel(l=1)
        w1, w2, w3 = w_coefficients(equal_ctx, table_params, channel)
        residual = certify_coefficients(equal_ctx, table_params, channel, (w1, 1.01 * w2, w3))
        assert residual > 1e-5

    def test_requires_uniform_grid(self, equal_ctx, table_params):
        r = np.concatenate([np.linspace(1.0, 1.01, 6), np.linspace(1.02, 1.05, 6)])
        sol = radial_wavefunction(equal_ctx, table_params, Channel(l=0), r)
        with pytest.raises(ConfigError):
            ode_residual(sol, equal_ctx, table_params, Channel(l=0))

    def test_requires_fine_grid(self, equal_ctx, table_params):
        r = np.linspace(1.0, 11.0, 11)
        sol = radial_wavefunction(equal_ctx, table_params, Channel(l=0), r)
        with pytest.raises(ConfigError):
            ode_residual(sol, equal_ctx, table_params, Channel(l=0))


class TestShooting:

    def test_agrees_with_pole_condition(self, equal_ctx):
        p = VarshniParams(a=0.15, b=0.15, beta=0.01)
        channel = Channel(l=0)
        analytic = solve_bound_energy(equal_ctx, p, channel, 0)
        shot = shoot_bound_energy(equal_ctx, p, channel, 0)
        assert shot is not None
        assert abs(shot - analytic.energy) < 1e-5 * abs(analytic.energy - p.a)

    def test_non_relativistic_limit(self):
        ctx = context_for(TwoBodyMasses(m1=1, m2=1), TABLE_ENERGY, sigma_override=1e-6)
        p = VarshniParams(a=0.15, b=0.15, beta=0.01)
        channel = Channel(l=0)
        analytic = solve_bound_energy(ctx, p, channel, 0)
        shot = shoot_bound_energy(ctx, p, channel, 0)
        assert shot is not None
        assert analytic.energy < p.a
        assert abs(shot - analytic.energy) < 1e-6 * abs(analytic.energy)
        assert abs(shot - analytic.energy) < 1e-4 * abs(analytic.energy - p.a)

    def test_missing_state(self, equal_ctx):
        p = VarshniParams(a=0.15, b=0.15, beta=0.01)
        assert shoot_bound_energy(equal_ctx, p, Channel(l=0), 1) is None
