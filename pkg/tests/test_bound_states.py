"""
Testes dos estados ligados: condição de polo, varredura e espectro
"""

import pytest

from models.base_models import Channel, VarshniParams
from models.error_models import DomainError, SupercriticalStrengthError
from services.bound_states import (
    bound_spectrum,
    energy_equation_sides,
    energy_window,
    pole_condition,
    pole_distance,
    solve_bound_energy,
)

SHALLOW = VarshniParams(a=0.15, b=0.15, beta=0.01)
SHALLOWER = VarshniParams(a=0.15, b=0.15, beta=0.005)


class TestPoleCondition:

    def test_ground_state_energy(self, equal_ctx):
        state = solve_bound_energy(equal_ctx, SHALLOW, Channel(l=0), 0)
        assert state is not None
        assert state.n == 0 and state.l == 0
        # κ = β(B − C − λ²)/(2λ) ≈ 0.00625 e ε ≈ −κ²/(2μ)
        assert state.energy - SHALLOW.a == pytest.approx(-3.908e-5, rel=1e-2)
        assert state.residual < 1e-10

    def test_residual_vanishes_at_solution(self, equal_ctx):
        state = solve_bound_energy(equal_ctx, SHALLOW, Channel(l=0), 0)
        assert abs(pole_condition(equal_ctx, SHALLOW, Channel(l=0), 0, state.energy)) < 1e-10

    def test_energy_equation_holds(self, equal_ctx):
        channel = Channel(l=0)
        state = solve_bound_energy(equal_ctx, SHALLOW, channel, 0)
        k_squared, rhs = energy_equation_sides(equal_ctx, SHALLOW, channel, 0, state.energy)
        assert k_squared < 0
        assert k_squared == pytest.approx(rhs, rel=1e-8)

    def test_pole_distance(self, equal_ctx):
        channel = Channel(l=0)
        state = solve_bound_energy(equal_ctx, SHALLOW, channel, 0)
        away = SHALLOW.a - 0.5 * energy_window(equal_ctx, SHALLOW)
        assert pole_distance(equal_ctx, SHALLOW, channel, state.energy) < 1e-8
        assert pole_distance(equal_ctx, SHALLOW, channel, away) > 1e-3

    def test_no_excited_state_in_shallow_well(self, equal_ctx):
        assert solve_bound_energy(equal_ctx, SHALLOW, Channel(l=0), 1) is None

    def test_excited_state_when_screening_weakens(self, equal_ctx):
        ground = solve_bound_energy(equal_ctx, SHALLOWER, Channel(l=0), 0)
        excited = solve_bound_energy(equal_ctx, SHALLOWER, Channel(l=0), 1)
        assert ground is not None and excited is not None
        assert ground.energy < excited.energy < SHALLOWER.a

    def test_no_well(self, equal_ctx):
        flat = VarshniParams(a=0.15, b=0.0, beta=0.01)
        assert solve_bound_energy(equal_ctx, flat, Channel(l=0), 0) is None

    def test_negative_n(self, equal_ctx):
        with pytest.raises(DomainError):
            solve_bound_energy(equal_ctx, SHALLOW, Channel(l=0), -1)
        with pytest.raises(DomainError):
            pole_condition(equal_ctx, SHALLOW, Channel(l=0), -1, 0.1)

    def test_supercritical(self, equal_ctx):
        strong = VarshniParams(a=1.5, b=1.5, beta=0.01)
        with pytest.raises(SupercriticalStrengthError):
            solve_bound_energy(equal_ctx, strong, Channel(l=0), 0)


class TestSpectrum:

    def test_ordered_by_n(self, equal_ctx):
        states = bound_spectrum(equal_ctx, SHALLOWER, Channel(l=0), 3)
        assert [s.n for s in states] == [0, 1]
        assert states[0].energy < states[1].energy

    def test_energy_window(self, equal_ctx):
        # min(μ/σ, 2(μab)²/μ) com μ = 0.5, σ = 1/4
        assert energy_window(equal_ctx, SHALLOW) == pytest.approx(2 * (0.5 * 0.0225) ** 2 / 0.5)
