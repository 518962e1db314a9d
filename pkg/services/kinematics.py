"""
Aritmética de massas de dois corpos: massa reduzida, índice de massa e
coeficiente relativístico σ = (μ/η)³
"""

import logging
from typing import Optional

from models.base_models import KinematicContext, TwoBodyMasses
from models.reference_data import get_preset

logger = logging.getLogger(__name__)


def reduced_mass(masses: TwoBodyMasses) -> float:
    """μ = m1·m2/(m1+m2)"""
    return masses.m1 * masses.m2 / (masses.m1 + masses.m2)


def mass_index(masses: TwoBodyMasses) -> float:
    """
    Índice de massa η = μ·[m1m2/(m1m2 − 3μ²)]^{1/3}

    m1m2 − 3μ² > 0 para quaisquer massas positivas, pois 3μ² ≤ 3m1m2/4.
    """
    mu = reduced_mass(masses)
    product = masses.m1 * masses.m2
    return mu * (product / (product - 3.0 * mu * mu)) ** (1.0 / 3.0)


def _sigma_from_masses(masses: TwoBodyMasses) -> float:
    # forma fechada de (μ/η)³, sem a raiz cúbica
    mu = reduced_mass(masses)
    return 1.0 - 3.0 * mu * mu / (masses.m1 * masses.m2)


def context_for(masses: TwoBodyMasses, energy: float,
                sigma_override: Optional[float] = None) -> KinematicContext:
    """
    Monta o contexto cinemático de um cálculo

    Args:
        masses: Massas das duas partículas
        energy: Energia E_{n,l}
        sigma_override: σ imposto (ex.: 1/4 e 1 da tabela de referência)

    Returns:
        KinematicContext validado
    """
    return KinematicContext(
        mu=reduced_mass(masses),
        eta=mass_index(masses),
        sigma=_sigma_from_masses(masses),
        energy=energy,
        sigma_override=sigma_override,
    )


def preset_context(name: str, energy: float) -> KinematicContext:
    """Contexto cinemático de um preset de massas (equal / unequal)"""
    preset = get_preset(name)
    masses = TwoBodyMasses(m1=preset.m1, m2=preset.m2)
    return context_for(masses, energy, preset.sigma_override)


def relativistic_coefficient(ctx: KinematicContext) -> float:
    """σ efetivo: o valor imposto quando existir, senão (μ/η)³"""
    if ctx.sigma_override is not None:
        return ctx.sigma_override
    return ctx.sigma
