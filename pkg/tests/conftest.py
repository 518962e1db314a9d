"""
Fixtures compartilhadas: contextos dos presets e parâmetros da tabela
"""

import pytest

from models.base_models import VarshniParams
from models.reference_data import TABLE_A, TABLE_B, TABLE_ENERGY
from services.kinematics import preset_context


@pytest.fixture
def equal_ctx():
    """Massas iguais, σ = 1/4, E = 1"""
    return preset_context("equal", TABLE_ENERGY)


@pytest.fixture
def unequal_ctx():
    """Massas 99 e 1, σ = 1, E = 1"""
    return preset_context("unequal", TABLE_ENERGY)


@pytest.fixture
def table_params():
    """a = b = 0.15 com β = 0.05"""
    return VarshniParams(a=TABLE_A, b=TABLE_B, beta=0.05)
