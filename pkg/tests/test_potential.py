"""
Testes do potencial de Varshni e da aproximação centrífuga
"""

import numpy as np
import pytest

from models.base_models import PotentialMode, VarshniParams
from models.error_models import DomainError
from services.potential import (
    asymptotic_coefficient,
    centrifugal_approx,
    centrifugal_deviation,
    radial_coefficient,
    screening_variable,
    validity_score,
    varshni,
)


class TestVarshni:

    def test_value(self, table_params):
        r = 2.0
        expected = 0.15 * (1 - (0.15 / r) * np.exp(-0.05 * r))
        assert varshni(table_params, r) == pytest.approx(expected, rel=1e-14)

    def test_tends_to_a(self, table_params):
        assert varshni(table_params, 1e4) == pytest.approx(table_params.a, rel=1e-12)

    def test_monotone_for_positive_strengths(self, table_params):
        r = np.linspace(0.05, 200.0, 4000)
        slope = np.diff(varshni(table_params, r))
        assert np.all(slope > 0)

    @pytest.mark.parametrize("r", [0.0, -1.0, np.inf])
    def test_invalid_radius(self, table_params, r):
        with pytest.raises(DomainError):
            varshni(table_params, r)

    def test_array_shape_preserved(self, table_params):
        r = np.linspace(1.0, 2.0, 7)
        assert varshni(table_params, r).shape == (7,)


class TestCentrifugal:

    def test_screening_variable_small_argument(self):
        # expm1 mantém precisão relativa para βr ≈ 1e-12
        assert screening_variable(1e-6, 1e-6) == pytest.approx(1e-12, rel=1e-10)

    def test_approximation_small_beta_r(self):
        assert centrifugal_approx(0.01, 1.0) == pytest.approx(1.0, rel=2e-2)

    def test_deviation_grows_with_beta_r(self):
        small = centrifugal_deviation(0.01, 1.0)
        large = centrifugal_deviation(0.01, 100.0)
        assert abs(small) < 2e-2
        assert large > small

    def test_deviation_series(self):
        # β²r²/(1−e^{−βr})² − 1 ≈ βr + (5/12)(βr)² para βr pequeno
        x = 1e-3
        assert centrifugal_deviation(1.0, x) == pytest.approx(x + 5.0 / 12.0 * x * x, rel=1e-4)


class TestRadialCoefficient:

    def test_modes_agree_for_small_beta_r(self, equal_ctx):
        p = VarshniParams(a=0.15, b=0.15, beta=1e-4)
        exact = radial_coefficient(equal_ctx, p, 2, 1.0, PotentialMode.EXACT)
        approx = radial_coefficient(equal_ctx, p, 2, 1.0, PotentialMode.APPROXIMATED)
        assert approx == pytest.approx(exact, rel=1e-3)

    def test_large_r_limit_is_k_squared(self, equal_ctx, table_params):
        q = radial_coefficient(equal_ctx, table_params, 3, 2000.0)
        assert q == pytest.approx(asymptotic_coefficient(equal_ctx, table_params, 3), rel=1e-10)

    def test_k_squared_formula(self, equal_ctx, table_params):
        excess = 1.0 - 0.15
        expected = 2 * 0.5 * excess + 0.25 * excess ** 2 - 6 * 0.05 ** 2
        assert asymptotic_coefficient(equal_ctx, table_params, 2) == pytest.approx(expected)

    def test_negative_channel(self, equal_ctx, table_params):
        with pytest.raises(DomainError):
            radial_coefficient(equal_ctx, table_params, -1, 1.0)

    def test_validity_score(self):
        assert validity_score(0.05, 0, 1.0) == pytest.approx(0.05)
        assert validity_score(0.05, 3, 2.0) == pytest.approx(0.05 * np.sqrt(12) / 2.0)
