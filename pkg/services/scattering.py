"""
Pipeline analítico de espalhamento: número de onda, coeficientes w,
parâmetros de onda, defasagem, normalização e funções de onda radiais
"""

import logging
import math
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from models.base_models import (
    Channel,
    CoefficientSet,
    KinematicContext,
    PhaseShiftResult,
    RadialSolution,
    SolutionSource,
    VarshniParams,
    WaveParameters,
)
from models.error_models import ErrorHandler
from services.kinematics import relativistic_coefficient
from services.potential import asymptotic_coefficient, screening_variable, validity_score
from services.specfun import hyp2f1_grid, log_gamma

logger = logging.getLogger(__name__)


def coupling_terms(ctx: KinematicContext, p: VarshniParams,
                   energy: Optional[float] = None) -> Tuple[float, float]:
    """
    Termos de acoplamento adimensionais do potencial

    B = 2ab(μ + σ(E−a))/β multiplica a parte 1/z e C = σa²b² a parte 1/z².

    Args:
        ctx: Contexto cinemático
        p: Parâmetros do potencial
        energy: Energia (padrão: a do contexto)

    Returns:
        (B, C)
    """
    sigma = relativistic_coefficient(ctx)
    excess = (ctx.energy if energy is None else energy) - p.a
    coupling = 2.0 * p.a * p.b * (ctx.mu + sigma * excess) / p.beta
    quadratic = sigma * (p.a * p.b) ** 2
    return coupling, quadratic


def wave_number(ctx: KinematicContext, p: VarshniParams, channel: Channel) -> float:
    """
    k = √(2μ(E−a) + σ(E−a)² − l(l+1)β²)

    Raises:
        EvanescentChannelError: radicando negativo (canal fechado)
    """
    k_squared = asymptotic_coefficient(ctx, p, channel.l)
    if k_squared < 0:
        raise ErrorHandler.handle_evanescent(channel.l, k_squared)
    return math.sqrt(k_squared)


def w_coefficients(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                   k: Optional[float] = None,
                   coefficient_set: CoefficientSet = CoefficientSet.REPAIRED
                   ) -> Tuple[float, float, float]:
    """
    Coeficientes (w1, w2, w3) de z²(1−z)²ψ'' − z²(1−z)ψ' + (−w1z² + w2z − w3)ψ = 0

    O conjunto "repaired" sai da substituição direta do potencial e do termo
    centrífugo aproximados; "printed" troca o sinal de w1.
    """
    if k is None:
        k = wave_number(ctx, p, channel)
    coupling, quadratic = coupling_terms(ctx, p)
    centrifugal = channel.l * (channel.l + 1)
    ratio = k / p.beta

    w1 = coupling - quadratic - centrifugal - ratio * ratio
    w2 = coupling - 2.0 * quadratic
    w3 = centrifugal - quadratic
    if CoefficientSet(coefficient_set) == CoefficientSet.PRINTED:
        w1 = -w1
    return w1, w2, w3


def indicial_exponent(ctx: KinematicContext, p: VarshniParams, channel: Channel) -> float:
    """
    λ = 1/2 + √(1/4 + l(l+1) − σa²b²)

    Raises:
        SupercriticalStrengthError: radicando negativo
    """
    _, quadratic = coupling_terms(ctx, p)
    radicand = 0.25 + channel.l * (channel.l + 1) - quadratic
    if radicand < 0:
        raise ErrorHandler.handle_supercritical(channel.l, radicand)
    return 0.5 + math.sqrt(radicand)


def _shared_root(radicand: float) -> complex:
    # ramo principal; radicando negativo dá +i√|x|
    if radicand >= 0:
        return complex(math.sqrt(radicand), 0.0)
    return complex(0.0, math.sqrt(-radicand))


def wave_parameters(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                    coefficient_set: CoefficientSet = CoefficientSet.REPAIRED) -> WaveParameters:
    """
    Parâmetros de onda λ, η₁, η₂, η₃ de um canal aberto

    η₁ = λ − ik/β − s, η₂ = λ − ik/β + s, η₃ = 2λ. No conjunto "repaired"
    s² = w1; no "printed" o radicando leva 2σa²b².
    """
    coefficient_set = CoefficientSet(coefficient_set)
    k = wave_number(ctx, p, channel)
    lam = indicial_exponent(ctx, p, channel)
    w1, w2, w3 = w_coefficients(ctx, p, channel, k, coefficient_set)

    if coefficient_set == CoefficientSet.PRINTED:
        coupling, quadratic = coupling_terms(ctx, p)
        radicand = coupling - 2.0 * quadratic - channel.l * (channel.l + 1) - (k / p.beta) ** 2
    else:
        radicand = w1
    s = _shared_root(radicand)

    base = complex(lam, -k / p.beta)
    return WaveParameters(
        lam=lam,
        eta1=base - s,
        eta2=base + s,
        eta3=complex(2.0 * lam, 0.0),
        k=k,
        beta=p.beta,
        w1=w1,
        w2=w2,
        w3=w3,
        s=s,
        coefficient_set=coefficient_set,
    )


def conjugation_residual(wp: WaveParameters) -> float:
    """
    Desvio das identidades de conjugação dos parâmetros de onda

    Com s real vale η₃−η₂ = η₁*, η₃−η₁ = η₂*; com s imaginário o par se
    inverte (η₃−η₁ = η₁*, η₃−η₂ = η₂*). Retorna o menor dos dois desvios.
    """
    direct = max(abs(wp.eta3 - wp.eta2 - wp.eta1.conjugate()),
                 abs(wp.eta3 - wp.eta1 - wp.eta2.conjugate()))
    swapped = max(abs(wp.eta3 - wp.eta1 - wp.eta1.conjugate()),
                  abs(wp.eta3 - wp.eta2 - wp.eta2.conjugate()))
    return min(direct, swapped)


def _matching_logs(wp: WaveParameters) -> Tuple[complex, complex, complex]:
    """log Γ(2ik/β), log Γ(η₃−η₂), log Γ(η₃−η₁)"""
    return (
        log_gamma(complex(0.0, 2.0 * wp.k / wp.beta)),
        log_gamma(wp.eta3 - wp.eta2),
        log_gamma(wp.eta3 - wp.eta1),
    )


def _normalization_from(wp: WaveParameters, logs: Tuple[complex, complex, complex],
                        printed: bool = False) -> float:
    lg_free, lg_second, lg_first = logs
    log_modulus = lg_second.real + lg_first.real - lg_free.real
    if printed:
        return math.exp(log_modulus) / math.sqrt(wp.eta3.real)
    return math.exp(log_modulus - log_gamma(wp.eta3).real)


def phase_shift(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                coefficient_set: CoefficientSet = CoefficientSet.REPAIRED) -> PhaseShiftResult:
    """
    δ_l = π(l+1)/2 + arg Γ(2ik/β) − arg Γ(η₃−η₂) − arg Γ(η₃−η₁)

    arg Γ é contínuo (parte imaginária de log Γ), então δ_l não é reduzido
    módulo 2π. O resultado carrega também N e os três argumentos.

    Raises:
        EvanescentChannelError, SupercriticalStrengthError, PoleError
    """
    wp = wave_parameters(ctx, p, channel, coefficient_set)
    logs = _matching_logs(wp)
    args = tuple(value.imag for value in logs)
    delta = math.pi * (channel.l + 1) / 2.0 + args[0] - args[1] - args[2]

    result = PhaseShiftResult(
        l=channel.l,
        delta=delta,
        k=wp.k,
        normalization=_normalization_from(wp, logs),
        lam=wp.lam,
        args=args,
        validity_score=validity_score(p.beta, channel.l, wp.k),
    )
    logger.debug(f"l={channel.l} k={wp.k:.6g} δ={delta:.6g}")
    return result


def normalization(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                  printed: bool = False) -> float:
    """
    N = |Γ(η₃−η₁)Γ(η₃−η₂)| / (Γ(η₃)|Γ(2ik/β)|)

    Com esse N a forma assintótica de ψ tem amplitude 2. printed=True
    retorna |Γ(η₁*)Γ(η₂*)/Γ(2ik/β)|/√η₃.
    """
    wp = wave_parameters(ctx, p, channel)
    return _normalization_from(wp, _matching_logs(wp), printed)


def radial_wavefunction(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                        r_grid: Union[np.ndarray, Iterable[float]],
                        hyp2f1_options: Optional[dict] = None) -> RadialSolution:
    """
    ψ(r) = N (1 − e^{−βr})^λ e^{ikr} ₂F₁(η₁, η₂; η₃; 1 − e^{−βr})

    Acima de z = 0.5 (r > ln 2/β) a ₂F₁ usa a fórmula de conexão, com
    1 − z = e^{−βr} passado sem cancelamento. Abaixo disso a série direta
    cancela por um fator de cerca de e^{2kr}; onde passa de 10⁴ o ponto é
    refeito pela conexão.

    Raises:
        ConvergenceError: nenhum dos dois caminhos resolve a ₂F₁ no ponto
    """
    grid = np.asarray(list(r_grid) if not isinstance(r_grid, np.ndarray) else r_grid, dtype=float)
    if grid.size == 0 or np.any(grid <= 0):
        raise ErrorHandler.handle_domain('r_grid', None, "grade deve ser positiva e não vazia")

    wp = wave_parameters(ctx, p, channel)
    scale = _normalization_from(wp, _matching_logs(wp))
    z = screening_variable(p.beta, grid)
    w = np.exp(-p.beta * grid)

    hypergeometric = hyp2f1_grid(wp.eta1, wp.eta2, wp.eta3, z, w, **(hyp2f1_options or {}))
    psi = scale * np.power(z, wp.lam) * np.exp(1j * wp.k * grid) * hypergeometric
    return RadialSolution(r_grid=grid, psi=psi, source=SolutionSource.ANALYTIC)


def asymptotic_wavefunction(result: PhaseShiftResult, channel: Channel,
                            r: Union[float, np.ndarray],
                            beta: Optional[float] = None) -> Union[float, np.ndarray]:
    """2 sin(kr + δ_l − lπ/2)"""
    radius = np.asarray(r, dtype=float)
    if beta is not None and np.any(beta * radius < 3.0):
        logger.warning(f"Forma assintótica avaliada com βr = {float(beta * np.min(radius)):.3g} < 3")
    value = 2.0 * np.sin(result.k * radius + result.delta - channel.l * math.pi / 2.0)
    return float(value) if value.ndim == 0 else value


def phase_shift_table(ctx: KinematicContext, p: VarshniParams, l_values: Iterable[int],
                      coefficient_set: CoefficientSet = CoefficientSet.REPAIRED
                      ) -> List[PhaseShiftResult]:
    """Coluna de δ_l para uma sequência de canais (todos precisam estar abertos)"""
    return [phase_shift(ctx, p, Channel(l=l), coefficient_set) for l in l_values]


def modulo_pi(angle: float) -> float:
    """Reduz um ângulo a (−π/2, π/2]"""
    reduced = math.remainder(angle, math.pi)
    return math.pi / 2.0 if reduced == -math.pi / 2.0 else reduced


