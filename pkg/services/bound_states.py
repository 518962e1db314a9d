"""
Polos da matriz S e energias de estados ligados

O estado ligado físico termina a série hipergeométrica em η₁ = −n com
k = iκ (solução que decai como e^{−κr}); a condição de polo é resolvida
como equação implícita em E, pois E aparece em k² e no acoplamento B.
"""

import logging
import math
from typing import List, Optional

import numpy as np
from scipy import optimize, special

from models.base_models import BoundState, Channel, KinematicContext, VarshniParams
from models.error_models import ErrorHandler
from services.kinematics import relativistic_coefficient
from services.scattering import coupling_terms, indicial_exponent

logger = logging.getLogger(__name__)

DEFAULT_SCAN_POINTS = 2000
DEFAULT_ENERGY_TOL = 1e-15


def _closed_channel_kappa(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                          excess: float) -> float:
    """κ = √(−k²) na energia E = a + ε; zero quando o canal está aberto"""
    sigma = relativistic_coefficient(ctx)
    k_squared = 2.0 * ctx.mu * excess + sigma * excess * excess \
        - channel.l * (channel.l + 1) * p.beta * p.beta
    return math.sqrt(max(0.0, -k_squared))


def _pole_residual(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                   n: int, lam: float, excess: float) -> float:
    kappa_ratio = _closed_channel_kappa(ctx, p, channel, excess) / p.beta
    coupling, quadratic = coupling_terms(ctx, p, p.a + excess)
    shifted = n + lam
    numerator = shifted * shifted + 2.0 * shifted * kappa_ratio \
        - coupling + quadratic + channel.l * (channel.l + 1)
    return numerator / (2.0 * (shifted + kappa_ratio))


def pole_condition(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                   n: int, energy: float) -> float:
    """
    Resíduo real f(E) da condição de polo η₁ + n = 0 com k = iκ

    f = ((n+λ)² + 2(n+λ)κ/β − B + C + l(l+1)) / (2(n+λ+κ/β)), forma
    racionalizada de n + λ + κ/β − s; zero exatamente no polo.

    Raises:
        SupercriticalStrengthError: radicando de λ negativo
    """
    if n < 0:
        raise ErrorHandler.handle_domain('n', n, "n deve ser ≥ 0")
    lam = indicial_exponent(ctx, p, channel)
    return _pole_residual(ctx, p, channel, n, lam, energy - p.a)


def energy_window(ctx: KinematicContext, p: VarshniParams) -> float:
    """
    Profundidade |ε| da janela de busca abaixo de a

    κ ≤ μ|ab| limita a ligação; além de ε = −μ/σ o termo 2με + σε² volta a
    crescer e a continuação deixa de ser física.
    """
    sigma = relativistic_coefficient(ctx)
    kappa_max = ctx.mu * abs(p.a * p.b)
    return min(ctx.mu / sigma, 2.0 * kappa_max * kappa_max / ctx.mu)


def solve_bound_energy(ctx: KinematicContext, p: VarshniParams, channel: Channel, n: int,
                       scan_points: int = DEFAULT_SCAN_POINTS,
                       tol: float = DEFAULT_ENERGY_TOL) -> Optional[BoundState]:
    """
    Resolve f(E) = 0 por varredura em grade fixa + refinamento de Brent

    Args:
        ctx: Contexto cinemático (a energia do contexto é ignorada)
        p: Parâmetros do potencial
        channel: Canal
        n: Número quântico radial
        scan_points: Pontos da varredura uniforme em ε
        tol: Tolerância absoluta em energia

    Returns:
        BoundState, ou None quando não há mudança de sinal (poço raso)
    """
    if n < 0:
        raise ErrorHandler.handle_domain('n', n, "n deve ser ≥ 0")
    lam = indicial_exponent(ctx, p, channel)
    depth = energy_window(ctx, p)
    if depth <= 0:
        logger.debug(f"Sem poço (a·b = 0): nenhum estado para l={channel.l}")
        return None

    def residual(excess: float) -> float:
        return _pole_residual(ctx, p, channel, n, lam, excess)

    grid = np.linspace(-depth, 0.0, scan_points)
    values = np.array([residual(excess) for excess in grid])
    changes = np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) <= 0)[0]

    for index in changes:
        lo, hi = float(grid[index]), float(grid[index + 1])
        if values[index] == 0.0:
            root = lo
        elif values[index + 1] == 0.0:
            root = hi
        else:
            root = optimize.brentq(residual, lo, hi, xtol=tol, maxiter=200)
        if root >= 0.0:
            continue
        state = BoundState(
            n=n,
            l=channel.l,
            energy=p.a + root,
            residual=abs(residual(root)),
        )
        logger.debug(f"Estado ligado n={n} l={channel.l}: E={state.energy:.12g}")
        return state

    logger.debug(f"Nenhuma mudança de sinal para n={n} l={channel.l}")
    return None


def bound_spectrum(ctx: KinematicContext, p: VarshniParams, channel: Channel, n_max: int,
                   scan_points: int = DEFAULT_SCAN_POINTS,
                   tol: float = DEFAULT_ENERGY_TOL) -> List[BoundState]:
    """Todos os estados com n ≤ n_max, ordenados por n"""
    states = []
    for n in range(n_max + 1):
        state = solve_bound_energy(ctx, p, channel, n, scan_points, tol)
        if state is not None:
            states.append(state)
    return states


def energy_equation_sides(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                          n: int, energy: float) -> tuple:
    """
    Os dois lados de k² = −β²[((n+λ)² − B + C + l(l+1))/(2(n+λ))]²

    Returns:
        (k²(E), lado direito)
    """
    lam = indicial_exponent(ctx, p, channel)
    sigma = relativistic_coefficient(ctx)
    excess = energy - p.a
    k_squared = 2.0 * ctx.mu * excess + sigma * excess * excess \
        - channel.l * (channel.l + 1) * p.beta * p.beta
    coupling, quadratic = coupling_terms(ctx, p, energy)
    shifted = n + lam
    bracket = (shifted * shifted - coupling + quadratic + channel.l * (channel.l + 1)) / (2.0 * shifted)
    return k_squared, -p.beta * p.beta * bracket * bracket


def pole_distance(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                  energy: float) -> float:
    """
    1/|Γ(λ + κ/β − s)| com k = iκ; vai a zero quando E se aproxima de um estado ligado
    """
    lam = indicial_exponent(ctx, p, channel)
    excess = energy - p.a
    kappa_ratio = _closed_channel_kappa(ctx, p, channel, excess) / p.beta
    coupling, quadratic = coupling_terms(ctx, p, energy)
    radicand = coupling - quadratic - channel.l * (channel.l + 1) + kappa_ratio * kappa_ratio
    root = math.sqrt(radicand) if radicand >= 0 else 1j * math.sqrt(-radicand)
    return float(abs(special.rgamma(lam + kappa_ratio - root)))
