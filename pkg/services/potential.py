"""
Potencial de Varshni, aproximação do termo centrífugo e coeficiente da
equação radial nas formas exata e aproximada
"""

import logging
from typing import Union

import numpy as np

from models.base_models import KinematicContext, PotentialMode, VarshniParams
from models.error_models import ErrorHandler
from services.kinematics import relativistic_coefficient

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


def _check_radius(r: ArrayLike) -> np.ndarray:
    radius = np.asarray(r, dtype=float)
    if np.any(radius <= 0) or not np.all(np.isfinite(radius)):
        raise ErrorHandler.handle_domain('r', float(np.min(radius)), "r deve ser positivo e finito")
    return radius


def _unwrap(value: np.ndarray, like: ArrayLike) -> ArrayLike:
    return float(value) if np.ndim(like) == 0 else value


def screening_variable(beta: float, r: ArrayLike) -> ArrayLike:
    """z = 1 − e^{−βr}, sem cancelamento para βr pequeno"""
    return -np.expm1(-beta * np.asarray(r, dtype=float))


def varshni(p: VarshniParams, r: ArrayLike) -> ArrayLike:
    """V(r) = a(1 − (b/r)e^{−βr})"""
    radius = _check_radius(r)
    value = p.a * (1.0 - (p.b / radius) * np.exp(-p.beta * radius))
    return _unwrap(value, r)


def centrifugal_approx(beta: float, r: ArrayLike) -> ArrayLike:
    """1/r² ≈ β²/(1 − e^{−βr})², válida para βr ≪ 1"""
    radius = _check_radius(r)
    z = screening_variable(beta, radius)
    return _unwrap(beta * beta / (z * z), r)


def centrifugal_deviation(beta: float, r: ArrayLike) -> ArrayLike:
    """Desvio relativo da aproximação em relação a 1/r²"""
    radius = _check_radius(r)
    value = np.asarray(centrifugal_approx(beta, radius)) * radius * radius - 1.0
    return _unwrap(value, r)


def radial_coefficient(ctx: KinematicContext, p: VarshniParams, l: int, r: ArrayLike,
                       mode: PotentialMode = PotentialMode.APPROXIMATED) -> ArrayLike:
    """
    Coeficiente Q(r) de ψ'' + Q(r)ψ = 0

    Q = −l(l+1)/r² + 2μ(E − V) + σ(E − V)². No modo aproximado 1/r² vira
    β²/(1 − e^{−βr})² e o 1/r dentro de V vira β/(1 − e^{−βr}).

    Args:
        ctx: Contexto cinemático
        p: Parâmetros do potencial
        l: Canal
        r: Raio (escalar ou array)
        mode: exact ou approximated

    Returns:
        Q(r) com o mesmo formato de r
    """
    if l < 0:
        raise ErrorHandler.handle_domain('l', l, "l deve ser ≥ 0")
    radius = _check_radius(r)
    sigma = relativistic_coefficient(ctx)
    mode = PotentialMode(mode)

    if mode == PotentialMode.EXACT:
        inverse_r = 1.0 / radius
        inverse_r2 = inverse_r * inverse_r
    else:
        z = screening_variable(p.beta, radius)
        inverse_r = p.beta / z
        inverse_r2 = inverse_r * inverse_r

    potential = p.a * (1.0 - p.b * inverse_r * np.exp(-p.beta * radius))
    kinetic = ctx.energy - potential
    value = -l * (l + 1) * inverse_r2 + 2.0 * ctx.mu * kinetic + sigma * kinetic * kinetic
    return _unwrap(value, r)


def asymptotic_coefficient(ctx: KinematicContext, p: VarshniParams, l: int) -> float:
    """k² = 2μ(E−a) + σ(E−a)² − l(l+1)β², limite r→∞ do modo aproximado"""
    sigma = relativistic_coefficient(ctx)
    excess = ctx.energy - p.a
    return 2.0 * ctx.mu * excess + sigma * excess * excess - l * (l + 1) * p.beta * p.beta


def validity_score(beta: float, l: int, k: float) -> float:
    """β·r_c com r_c = max(1, √(l(l+1)))/k, escala radial característica do canal"""
    return beta * max(1.0, float(np.sqrt(l * (l + 1)))) / k


def grid_validity(beta: float, r_grid: np.ndarray) -> float:
    """max(βr) sobre a grade; valores ≫ 1 saem da região de validade da aproximação"""
    score = float(beta * np.max(r_grid))
    if score > 1.0:
        logger.debug(f"Grade alcança βr = {score:.3g} (aproximação válida para βr ≪ 1)")
    return score
