"""
Oráculo numérico independente do pipeline analítico

Integra ψ'' + Q(r)ψ = 0 pelo método de Numerov, extrai a defasagem por
ajuste senoidal, calcula o resíduo da EDO transformada sobre a solução
analítica e resolve estados ligados por shooting.
"""

import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from models.base_models import (
    Channel,
    IntegrationConfig,
    KinematicContext,
    PotentialMode,
    RadialSolution,
    SolutionSource,
    VarshniParams,
)
from models.error_models import AsymptoticRegimeError, ErrorHandler
from services.bound_states import energy_window
from services.kinematics import relativistic_coefficient
from services.potential import asymptotic_coefficient, radial_coefficient, screening_variable
from services.scattering import (
    coupling_terms,
    indicial_exponent,
    radial_wavefunction,
    w_coefficients,
    wave_number,
)

logger = logging.getLogger(__name__)

# derivada segunda de sexta ordem em 7 pontos
_STENCIL = np.array([2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0]) / 180.0
_MAX_BETA_STEP = 1e-3
_FROBENIUS_TERMS = 12


def _exact_wave_number(ctx: KinematicContext, p: VarshniParams) -> float:
    sigma = relativistic_coefficient(ctx)
    excess = ctx.energy - p.a
    k_squared = 2.0 * ctx.mu * excess + sigma * excess * excess
    if k_squared <= 0:
        raise ErrorHandler.handle_evanescent(0, k_squared)
    return math.sqrt(k_squared)


def oracle_wave_number(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                       mode: PotentialMode = PotentialMode.APPROXIMATED) -> float:
    """k assintótico do modelo integrado (no modo exato sem o termo −l(l+1)β²)"""
    if PotentialMode(mode) == PotentialMode.EXACT:
        return _exact_wave_number(ctx, p)
    return wave_number(ctx, p, channel)


def _numerov(coefficient: np.ndarray, h: float, y0, y1) -> np.ndarray:
    """
    y_{n+1}(1 + h²Q_{n+1}/12) = 2y_n(1 − 5h²Q_n/12) − y_{n−1}(1 + h²Q_{n−1}/12)

    coefficient pode ter formato (N,) ou (N, M) para M equações em lote.
    """
    factor = 1.0 + h * h * coefficient / 12.0
    middle = 2.0 * (1.0 - 5.0 * h * h * coefficient / 12.0)

    if coefficient.ndim == 1:
        # laço escalar em floats do Python
        factor_list = factor.tolist()
        middle_list = middle.tolist()
        values = [float(y0), float(y1)]
        for n in range(1, len(factor_list) - 1):
            values.append((middle_list[n] * values[n] - factor_list[n - 1] * values[n - 1])
                          / factor_list[n + 1])
        return np.array(values)

    y = np.empty(coefficient.shape, dtype=float)
    y[0] = y0
    y[1] = y1
    for n in range(1, coefficient.shape[0] - 1):
        y[n + 1] = (middle[n] * y[n] - factor[n - 1] * y[n - 1]) / factor[n + 1]
    return y


def _grid(r_min: float, r_max: float, h: float) -> np.ndarray:
    count = int(math.floor((r_max - r_min) / h)) + 1
    if count < 4:
        raise ErrorHandler.handle_config('max_step', "passo maior que o intervalo de integração")
    return r_min + h * np.arange(count)


def _start_radius(h: float, l: int) -> float:
    """Primeiro ponto da grade, com 1 + h²Q/12 ≥ 1/2 na barreira centrífuga"""
    return h * max(1.0, math.sqrt(l * (l + 1) / 6.0))


def _model_coefficients(ctx: KinematicContext, p: VarshniParams,
                        channel: Channel) -> Tuple[float, float, float]:
    # como w_coefficients, mas aceita k² < 0 (energias de shooting)
    coupling, quadratic = coupling_terms(ctx, p)
    centrifugal = channel.l * (channel.l + 1)
    k_squared = asymptotic_coefficient(ctx, p, channel.l)
    w1 = coupling - quadratic - centrifugal - k_squared / (p.beta * p.beta)
    return w1, coupling - 2.0 * quadratic, centrifugal - quadratic


def _frobenius_start(z: np.ndarray, lam: float, w1, w2,
                     terms: int = _FROBENIUS_TERMS) -> np.ndarray:
    """
    Solução regular Σ c_m z^{m+λ} da equação em z perto da origem

    c_0 = 1 e c_m·m(m+2λ−1) = c_{m−1}[ν₁(2ν₁−1) − w2] − c_{m−2}[ν₂² − w1],
    com ν₁ = m−1+λ e ν₂ = m−2+λ. w1 e w2 podem ser arrays (um por
    equação do lote); o resultado tem formato (len(z), len(w1)).
    """
    z = np.asarray(z, dtype=float)[:, None]
    w1 = np.atleast_1d(np.asarray(w1, dtype=float))
    w2 = np.atleast_1d(np.asarray(w2, dtype=float))
    before, current = np.zeros(w1.shape), np.ones(w1.shape)
    total = np.ones((z.shape[0], w1.size))
    for m in range(1, terms + 1):
        nu1, nu2 = m - 1 + lam, m - 2 + lam
        following = (current * (nu1 * (2.0 * nu1 - 1.0) - w2)
                     - before * (nu2 * nu2 - w1)) / (m * (m + 2.0 * lam - 1.0))
        total = total + following * z ** m
        before, current = current, following
    return z ** lam * total


def _exact_start(r: np.ndarray, lam: float, w2: float, beta: float) -> np.ndarray:
    """r^λ(1 − βw2·r/(2λ)): dois termos da solução regular do potencial exato"""
    return r ** lam * (1.0 - beta * w2 * r / (2.0 * lam))


def integrate_radial(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                     cfg: Optional[IntegrationConfig] = None) -> RadialSolution:
    """
    Integra a equação radial para fora a partir da solução regular na origem

    A grade começa em r = h·max(1, √(l(l+1)/6)), com h = max_step/k, e os
    dois primeiros valores vêm da série de Frobenius (z^λ·Σc_m z^m no modo
    aproximado, r^λ(1 + c_1 r) no exato).

    Args:
        ctx: Contexto cinemático
        p: Parâmetros do potencial
        channel: Canal
        cfg: Configuração (passo k·Δr, raios, modo exact/approximated)

    Returns:
        RadialSolution com source=oracle (amostras reais, escala arbitrária)

    Raises:
        EvanescentChannelError: canal fechado
        ConfigError: passo incompatível com o intervalo
    """
    cfg = cfg or IntegrationConfig()
    mode = PotentialMode(cfg.mode)
    k = oracle_wave_number(ctx, p, channel, mode)
    h = cfg.max_step / k
    r_min = cfg.r_min if cfg.r_min is not None else _start_radius(h, channel.l)
    r_max = cfg.r_max if cfg.r_max is not None else max(40.0 / k, 30.0 / p.beta)
    if r_max <= r_min:
        raise ErrorHandler.handle_config('r_max', "deve ser maior que r_min")

    grid = _grid(r_min, r_max, h)
    coefficient = radial_coefficient(ctx, p, channel.l, grid, mode)
    lam = indicial_exponent(ctx, p, channel)
    w1, w2, _ = _model_coefficients(ctx, p, channel)
    if mode == PotentialMode.EXACT:
        start = _exact_start(grid[:2], lam, w2, p.beta)
    else:
        start = _frobenius_start(screening_variable(p.beta, grid[:2]), lam, w1, w2)[:, 0]

    logger.debug(f"Numerov l={channel.l} modo={mode.value} passos={grid.size} h={h:.3g}")
    psi = _numerov(coefficient, h, start[0], start[1])
    peak = np.max(np.abs(psi))
    return RadialSolution(r_grid=grid, psi=psi / peak, source=SolutionSource.ORACLE)


def _tail_fit(sol: RadialSolution, k: float, fit_window: Optional[float]) -> Tuple[float, float, float]:
    """Ajuste c1·sin(kr) + c2·cos(kr) no trecho final; retorna (c1, c2, rms do resíduo)"""
    start = 0 if fit_window is None else int(sol.r_grid.size * (1.0 - fit_window))
    r = sol.r_grid[start:]
    y = np.real(sol.psi[start:])
    design = np.column_stack([np.sin(k * r), np.cos(k * r)])
    coefficients, _, _, _ = np.linalg.lstsq(design, y, rcond=None)
    fitted = design @ coefficients
    rms = float(np.sqrt(np.mean((y - fitted) ** 2)))
    return float(coefficients[0]), float(coefficients[1]), rms


def extract_phase(sol: RadialSolution, k: float, channel: Channel,
                  fit_window: float = 0.25) -> float:
    """
    Defasagem módulo π por ajuste de A·sin(kr + φ) na janela final

    Returns:
        δ_l ≡ φ + lπ/2 reduzido a (−π/2, π/2]

    Raises:
        AsymptoticRegimeError: resíduo do ajuste acima de 1% da amplitude
    """
    c1, c2, rms = _tail_fit(sol, k, fit_window)
    amplitude = math.hypot(c1, c2)
    if amplitude == 0.0 or rms > 0.01 * amplitude:
        raise AsymptoticRegimeError(
            "Ajuste senoidal ruim: solução fora da região assintótica",
            {"l": channel.l, "rms": rms, "amplitude": amplitude},
        )
    phase = math.atan2(c2, c1) + channel.l * math.pi / 2.0
    reduced = math.remainder(phase, math.pi)
    return math.pi / 2.0 if reduced == -math.pi / 2.0 else reduced


def fit_amplitude(sol: RadialSolution, k: float, fit_window: Optional[float] = None) -> float:
    """Amplitude A do ajuste A·sin(kr + φ) (grade inteira quando fit_window é None)"""
    c1, c2, _ = _tail_fit(sol, k, fit_window)
    return math.hypot(c1, c2)


def ode_residual(sol: RadialSolution, ctx: KinematicContext, p: VarshniParams,
                 channel: Channel, w: Optional[Sequence[float]] = None) -> float:
    """
    Resíduo relativo máximo de ψ'' + β²(−w1z² + w2z − w3)ψ/z² = 0

    Forma em r da equação transformada em z; ψ'' por diferenças finitas de
    sexta ordem numa grade uniforme.

    Args:
        sol: Solução amostrada em grade uniforme com βΔr ≤ 10⁻³
        ctx, p, channel: Modelo
        w: (w1, w2, w3) a certificar (padrão: conjunto repaired)

    Returns:
        max|resíduo| / max(|ψ''|, |β²Pψ/z²|)

    Raises:
        ConfigError: grade não uniforme, curta ou grossa demais
    """
    grid = sol.r_grid
    if grid.size < len(_STENCIL):
        raise ErrorHandler.handle_config('r_grid', "grade precisa de ao menos 7 pontos")
    steps = np.diff(grid)
    h = float(np.mean(steps))
    if np.max(np.abs(steps - h)) > 1e-9 * h:
        raise ErrorHandler.handle_config('r_grid', "grade precisa ser uniforme")
    if p.beta * h > _MAX_BETA_STEP * (1.0 + 1e-9):
        raise ErrorHandler.handle_config('r_grid', f"βΔr = {p.beta * h:.3g} > 10⁻³")

    w1, w2, w3 = w if w is not None else w_coefficients(ctx, p, channel)
    psi = sol.psi
    second = np.zeros(psi.size - 6, dtype=complex)
    for offset, weight in enumerate(_STENCIL):
        second += weight * psi[offset:offset + psi.size - 6]
    second /= h * h

    inner = grid[3:-3]
    z = screening_variable(p.beta, inner)
    potential_term = p.beta ** 2 * (-w1 * z * z + w2 * z - w3) * psi[3:-3] / (z * z)
    scale = max(float(np.max(np.abs(second))), float(np.max(np.abs(potential_term))))
    return float(np.max(np.abs(second + potential_term)) / scale)


def certification_bands(beta: float, k: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Grades onde a ψ analítica é bem condicionada

    Perto da origem a série direta perde cerca de e^{2kr} por cancelamento,
    então a primeira faixa fica em r ≤ 3/k (e z ≤ 0.15). A segunda cobre
    z ∈ [0.55, 0.9], onde vale a fórmula de conexão.
    """
    near_end = min(3.0 / k, -math.log(0.85) / beta)
    near_step = min(5e-4 / beta, 0.01 / k)
    near = np.arange(0.2 / k, near_end, near_step)
    far_step = _MAX_BETA_STEP / beta
    far = np.arange(-math.log(0.45) / beta, -math.log(0.1) / beta, far_step)
    return near, far


def certify_coefficients(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                         w: Optional[Sequence[float]] = None,
                         hyp2f1_options: Optional[dict] = None) -> float:
    """Maior resíduo de ode_residual nas duas faixas de certificação"""
    worst = 0.0
    k = wave_number(ctx, p, channel)
    for band in certification_bands(p.beta, k):
        sol = radial_wavefunction(ctx, p, channel, band, hyp2f1_options)
        worst = max(worst, ode_residual(sol, ctx, p, channel, w))
    return worst


def _shooting_tail(ctx: KinematicContext, p: VarshniParams, channel: Channel,
                   energies: np.ndarray, grid: np.ndarray, h: float, lam: float) -> np.ndarray:
    """ψ(r_max) para um lote de energias, integrado para fora"""
    contexts = [ctx.model_copy(update={'energy': float(energy)}) for energy in energies]
    coefficient = np.column_stack([
        radial_coefficient(shifted, p, channel.l, grid) for shifted in contexts
    ])
    w1, w2, _ = np.array([_model_coefficients(shifted, p, channel) for shifted in contexts]).T
    start = _frobenius_start(screening_variable(p.beta, grid[:2]), lam, w1, w2)
    psi = _numerov(coefficient, h, start[0], start[1])
    return psi[-1]


def shoot_bound_energy(ctx: KinematicContext, p: VarshniParams, channel: Channel, n: int,
                       step: float = 0.1, r_max: Optional[float] = None,
                       scan_points: int = 80, tol: float = 1e-14) -> Optional[float]:
    """
    Energia do n-ésimo estado ligado do modelo aproximado por shooting

    Para cada energia integra para fora e observa o sinal de ψ(r_max); a
    n-ésima troca de sinal (de baixo para cima) é o estado n, refinado por
    Brent. Usa o σ do contexto (ex.: 10⁻⁶ para o limite não relativístico).

    Returns:
        Energia E, ou None se não houver troca de sinal suficiente
    """
    depth = energy_window(ctx, p)
    if depth <= 0:
        return None
    lam = indicial_exponent(ctx, p, channel)
    r_max = r_max if r_max is not None else 40.0 / p.beta
    grid = _grid(_start_radius(step, channel.l), r_max, step)

    energies = p.a + np.linspace(-depth, 0.0, scan_points)[:-1]
    tails = _shooting_tail(ctx, p, channel, energies, grid, step, lam)
    changes = np.nonzero(np.sign(tails[:-1]) != np.sign(tails[1:]))[0]
    if changes.size <= n:
        logger.debug(f"Shooting: {changes.size} trocas de sinal, estado n={n} ausente")
        return None

    index = changes[n]

    def tail(energy: float) -> float:
        return float(_shooting_tail(ctx, p, channel, np.array([energy]), grid, step, lam)[0])

    return optimize.brentq(tail, float(energies[index]), float(energies[index + 1]), xtol=tol)
