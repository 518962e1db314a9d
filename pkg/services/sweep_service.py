"""
Serviço de varreduras: registros por canal, estados ligados, varredura de β
e grade de validação contra o oráculo
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import Settings
from models.base_models import (
    Channel,
    CoefficientSet,
    IntegrationConfig,
    KinematicContext,
    PotentialMode,
    RunConfig,
    VarshniParams,
)
from models.error_models import ErrorHandler, ScatteringError, SupercriticalStrengthError
from models.reference_data import TABLE_L_MAX, TABLE_PHASE_SHIFTS
from models.response_models import (
    BetaScanEntry,
    BoundStateRecord,
    DeviationRow,
    PhaseShiftRecord,
    ScanReport,
    TableRow,
    ValidationCheck,
    ValidationReport,
)
from services.bound_states import bound_spectrum
from services.kinematics import context_for, preset_context, relativistic_coefficient
from services.oracle import certify_coefficients, extract_phase, fit_amplitude, integrate_radial, oracle_wave_number
from services.potential import grid_validity
from services.scattering import (
    modulo_pi,
    phase_shift,
    phase_shift_table,
    radial_wavefunction,
    w_coefficients,
)

logger = logging.getLogger(__name__)

VALIDATION_BETAS = (0.01, 0.025, 0.05)
VALIDATION_PRESETS = ("equal", "unequal")


def feasible_beta_bound(ctx: KinematicContext, a: float, l_max: int) -> float:
    """
    Maior β com k² > 0 em todos os canais até l_max

    β < √((2μ(E−a) + σ(E−a)²)/(l_max(l_max+1)))
    """
    sigma = relativistic_coefficient(ctx)
    excess = ctx.energy - a
    open_part = 2.0 * ctx.mu * excess + sigma * excess * excess
    if open_part <= 0:
        raise ErrorHandler.handle_evanescent(0, open_part)
    if l_max == 0:
        return math.inf
    return math.sqrt(open_part / (l_max * (l_max + 1)))


def sign_pattern_matches(deltas: Sequence[float], reference: Sequence[float]) -> Tuple[int, bool]:
    """
    Compara o padrão qualitativo com a referência

    Returns:
        (canais com sinal trocado, padrão reproduzido): sinais iguais, queda
        monótona a partir de l = 5 e δ no último canal dentro de 10% da referência
    """
    values = np.asarray(deltas, dtype=float)
    expected = np.asarray(reference[:values.size], dtype=float)
    mismatches = int(np.count_nonzero(np.sign(values) != np.sign(expected)))
    decreasing = bool(np.all(np.diff(values[5:]) < 0)) if values.size > 6 else False
    scale_ok = abs(values[-1] - expected[-1]) <= 0.1 * abs(expected[-1])
    return mismatches, mismatches == 0 and decreasing and scale_ok


class SweepService:
    """Executa os cálculos em lote usados pela CLI e pela API"""

    def __init__(self, settings: Optional[Settings] = None):
        """
        Inicializa o serviço

        Args:
            settings: Configurações (padrão: lidas do ambiente)
        """
        self.settings = settings or Settings()

    def _map(self, function, items: Iterable):
        # map preserva a ordem de entrada
        with ThreadPoolExecutor(max_workers=self.settings.MAX_WORKERS) as executor:
            return list(executor.map(function, items))

    @staticmethod
    def context(cfg: RunConfig) -> KinematicContext:
        """Contexto cinemático de uma execução"""
        return context_for(cfg.masses(), cfg.energy, cfg.sigma_override)

    def phase_shift_records(self, cfg: RunConfig) -> List[PhaseShiftRecord]:
        """
        Um registro por canal; canais fechados ou singulares viram status

        Args:
            cfg: Configuração da execução

        Returns:
            Registros na ordem de cfg.l_values
        """
        ctx = self.context(cfg)
        p = cfg.potential()

        def record(l: int) -> PhaseShiftRecord:
            try:
                result = phase_shift(ctx, p, Channel(l=l))
            except ScatteringError as e:
                logger.warning(f"Canal l={l} ignorado: {e.message}")
                return PhaseShiftRecord(l=l, status=e.error_code.value.lower())
            return PhaseShiftRecord(
                l=l,
                k=result.k,
                delta=result.delta,
                normalization=result.normalization,
                lam=result.lam,
                validity_score=result.validity_score,
            )

        return self._map(record, cfg.l_values)

    def bound_state_records(self, cfg: RunConfig) -> List[BoundStateRecord]:
        """Estados com n ≤ n_max para cada canal, ordenados por (l, n)"""
        ctx = self.context(cfg)
        p = cfg.potential()

        def spectrum(l: int) -> List[BoundStateRecord]:
            try:
                states = bound_spectrum(
                    ctx, p, Channel(l=l), cfg.n_max,
                    scan_points=self.settings.BOUND_SCAN_POINTS,
                    tol=self.settings.BOUND_ENERGY_TOL,
                )
            except SupercriticalStrengthError as e:
                logger.warning(f"Canal l={l} ignorado: {e.message}")
                return []
            return [
                BoundStateRecord(n=s.n, l=s.l, energy=s.energy, residual=s.residual)
                for s in states
            ]

        records = [item for group in self._map(spectrum, cfg.l_values) for item in group]
        return sorted(records, key=lambda r: (r.l, r.n))

    def default_beta_grid(self, bound: float) -> np.ndarray:
        """Grade uniforme em (0, bound) sem tocar o limite de canal aberto"""
        points = self.settings.BETA_SCAN_POINTS
        return bound * np.linspace(1.0 / points, 1.0 - 1e-3, points)

    def scan_beta(self, preset: str, a: float = 0.15, b: float = 0.15, energy: float = 1.0,
                  l_max: int = TABLE_L_MAX,
                  beta_grid: Optional[Sequence[float]] = None) -> ScanReport:
        """
        Procura o β que melhor reproduz a coluna publicada do preset

        Args:
            preset: equal ou unequal
            a, b, energy: Parâmetros da tabela
            l_max: Maior canal comparado
            beta_grid: Grade explícita (padrão: uniforme até o limite viável)

        Returns:
            ScanReport com os dois conjuntos de coeficientes por β

        Raises:
            DomainError: nenhum β viável na grade
        """
        ctx = preset_context(preset, energy)
        reference = TABLE_PHASE_SHIFTS[preset][:l_max + 1]
        bound = feasible_beta_bound(ctx, a, l_max)

        grid = self.default_beta_grid(bound) if beta_grid is None else np.asarray(beta_grid, dtype=float)
        feasible = [float(beta) for beta in grid if 0 < beta < bound]
        if not feasible:
            raise ErrorHandler.handle_domain('beta_grid', list(map(float, grid)),
                                             f"nenhum β abaixo do limite viável {bound:.6g}")

        tasks = [(beta, cset) for beta in feasible for cset in CoefficientSet]

        def evaluate(task) -> Optional[BetaScanEntry]:
            beta, cset = task
            p = VarshniParams(a=a, b=b, beta=beta)
            try:
                results = phase_shift_table(ctx, p, range(l_max + 1), cset)
            except ScatteringError as e:
                logger.debug(f"β={beta:.6g} ({cset.value}) ignorado: {e.message}")
                return None
            deltas = [r.delta for r in results]
            deviations = np.abs(np.asarray(deltas) - np.asarray(reference))
            mismatches, match = sign_pattern_matches(deltas, reference)
            return BetaScanEntry(
                beta=beta,
                coefficient_set=cset.value,
                deltas=deltas,
                max_abs_deviation=float(np.max(deviations)),
                sign_mismatches=mismatches,
                pattern_match=match,
            )

        entries = [entry for entry in self._map(evaluate, tasks) if entry is not None]
        if not entries:
            raise ErrorHandler.handle_domain('beta_grid', None, "nenhum ponto calculável na grade")

        best = min(entries, key=lambda entry: entry.max_abs_deviation)
        rows = [
            DeviationRow(l=l, delta=delta, reference=ref, deviation=delta - ref)
            for l, (delta, ref) in enumerate(zip(best.deltas, reference))
        ]
        logger.info(f"Melhor β={best.beta:.6g} ({best.coefficient_set}) "
                    f"desvio máximo={best.max_abs_deviation:.4g}")
        return ScanReport(
            preset=preset,
            l_max=l_max,
            feasible_upper_bound=bound,
            entries=entries,
            best_beta=best.beta,
            best_coefficient_set=best.coefficient_set,
            best_max_abs_deviation=best.max_abs_deviation,
            best_rows=rows,
            pattern_found=any(entry.pattern_match for entry in entries),
        )

    def _validation_point(self, preset: str, a: float, b: float, energy: float,
                          beta: float, l: int, perturb_w2: bool,
                          include_exact: bool) -> Tuple[List[ValidationCheck], float]:
        settings = self.settings
        ctx = preset_context(preset, energy)
        p = VarshniParams(a=a, b=b, beta=beta)
        channel = Channel(l=l)
        checks = []

        def check(name: str, value: float, tolerance: Optional[float]) -> None:
            passed = tolerance is None or value <= tolerance
            checks.append(ValidationCheck(name=name, preset=preset, beta=beta, l=l,
                                          value=value, tolerance=tolerance, passed=passed))

        result = phase_shift(ctx, p, channel)
        cfg = IntegrationConfig(max_step=settings.ORACLE_MAX_STEP, fit_window=settings.ORACLE_FIT_WINDOW)
        sol = integrate_radial(ctx, p, channel, cfg)
        numeric = extract_phase(sol, result.k, channel, settings.ORACLE_FIT_WINDOW)
        check("phase", abs(modulo_pi(result.delta - numeric)), settings.PHASE_TOLERANCE)

        w = None
        if perturb_w2:
            w1, w2, w3 = w_coefficients(ctx, p, channel)
            w = (w1, 1.01 * w2, w3)
        residual = certify_coefficients(ctx, p, channel, w, settings.get_hyp2f1_options())
        check("ode_residual", residual, settings.RESIDUAL_TOLERANCE)

        start = 25.0 / beta
        r_grid = np.linspace(start, start + 40.0 * math.pi / result.k, 800)
        analytic = radial_wavefunction(ctx, p, channel, r_grid, settings.get_hyp2f1_options())
        check("amplitude", abs(fit_amplitude(analytic, result.k) - 2.0), settings.AMPLITUDE_TOLERANCE)

        max_beta_r = grid_validity(beta, sol.r_grid)
        if include_exact:
            exact_cfg = cfg.model_copy(update={'mode': PotentialMode.EXACT.value})
            exact = integrate_radial(ctx, p, channel, exact_cfg)
            k_exact = oracle_wave_number(ctx, p, channel, PotentialMode.EXACT)
            exact_phase = extract_phase(exact, k_exact, channel, settings.ORACLE_FIT_WINDOW)
            check("exact_vs_approximated", abs(modulo_pi(exact_phase - numeric)), None)
        return checks, max_beta_r

    def validate(self, a: float = 0.15, b: float = 0.15, energy: float = 1.0,
                 l_values: Sequence[int] = tuple(range(6)),
                 betas: Sequence[float] = VALIDATION_BETAS,
                 presets: Sequence[str] = VALIDATION_PRESETS,
                 perturb_w2: bool = False, include_exact: bool = True) -> ValidationReport:
        """
        Roda a grade de validação analítico vs oráculo

        Verifica fase módulo π, resíduo da EDO nas faixas de certificação e
        amplitude assintótica; a diferença exato vs aproximado é informativa.

        Args:
            perturb_w2: Multiplica w2 por 1.01 na certificação (deve falhar)
            include_exact: Inclui o diagnóstico do modelo exato
        """
        tasks = [(preset, beta, l) for preset in presets for beta in betas for l in l_values]

        def run(task):
            preset, beta, l = task
            return self._validation_point(preset, a, b, energy, beta, l, perturb_w2, include_exact)

        outcomes = self._map(run, tasks)
        checks = [item for group, _ in outcomes for item in group]

        def worst(name: str) -> float:
            values = [c.value for c in checks if c.name == name]
            return max(values) if values else 0.0

        return ValidationReport(
            checks=checks,
            worst_phase_deviation=worst("phase"),
            worst_residual=worst("ode_residual"),
            worst_amplitude_deviation=worst("amplitude"),
            max_beta_r=max((beta_r for _, beta_r in outcomes), default=0.0),
            passed=all(c.passed for c in checks),
        )

    def table_comparison(self, beta: float, a: float = 0.15, b: float = 0.15,
                         energy: float = 1.0,
                         l_values: Sequence[int] = tuple(range(TABLE_L_MAX + 1))) -> List[TableRow]:
        """δ_l dos presets equal e unequal lado a lado com os valores publicados"""
        p = VarshniParams(a=a, b=b, beta=beta)
        contexts = {name: preset_context(name, energy) for name in VALIDATION_PRESETS}

        def delta_for(name: str, l: int) -> Optional[float]:
            try:
                return phase_shift(contexts[name], p, Channel(l=l)).delta
            except ScatteringError as e:
                logger.warning(f"{name} l={l} ignorado: {e.message}")
                return None

        def reference_for(name: str, l: int) -> Optional[float]:
            column = TABLE_PHASE_SHIFTS[name]
            return column[l] if l < len(column) else None

        def row(l: int) -> TableRow:
            return TableRow(
                l=l,
                delta_equal=delta_for("equal", l),
                delta_unequal=delta_for("unequal", l),
                reference_equal=reference_for("equal", l),
                reference_unequal=reference_for("unequal", l),
            )

        return self._map(row, l_values)
