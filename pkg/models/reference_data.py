"""
Dados de referência publicados e presets de massas
"""

from typing import Dict, Optional, Tuple

from pydantic import Field

from .base_models import BaseEntity
from .error_models import ErrorHandler


class MassPreset(BaseEntity):
    """Combinação de massas usada na tabela de referência"""

    name: str = Field(..., description="Nome do preset")
    m1: float = Field(..., description="Massa 1")
    m2: float = Field(..., description="Massa 2")
    sigma_override: Optional[float] = Field(default=None, description="σ imposto")


MASS_PRESETS: Dict[str, MassPreset] = {
    "equal": MassPreset(name="equal", m1=1.0, m2=1.0, sigma_override=0.25),
    "unequal": MassPreset(name="unequal", m1=99.0, m2=1.0, sigma_override=1.0),
}

# Parâmetros comuns da tabela: a = b = 0.15, E = 1
TABLE_A = 0.15
TABLE_B = 0.15
TABLE_ENERGY = 1.0

# δ_l publicado para l = 0..20
TABLE_PHASE_SHIFTS: Dict[str, Tuple[float, ...]] = {
    "equal": (
        -3.20116, -0.48696, 3.94288, 1.44838, -1.48742, -4.77575, -8.36940,
        -12.23144, -16.33226, -20.64778, -25.15815, -29.84674, -34.69945,
        -39.70422, -44.85058, -50.12941, -55.53264, -61.05314, -66.68454,
        -72.42109, -78.25764,
    ),
    "unequal": (
        -10.14667, -8.03766, -2.55423, 5.13545, 1.52129, -2.18885, -6.07785,
        -10.16280, -14.43993, -18.89947, -23.53029, -28.32149, -33.26291,
        -38.34528, -43.56023, -48.90018, -54.35831, -59.92842, -65.60491,
        -71.38266, -77.25701,
    ),
}

TABLE_L_MAX = 20


def get_preset(name: str) -> MassPreset:
    """Retorna o preset de massas pelo nome"""
    try:
        return MASS_PRESETS[name]
    except KeyError:
        raise ErrorHandler.handle_config('preset', f"preset desconhecido: {name}")
