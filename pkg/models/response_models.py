"""
Modelos de saída: registros da CLI, relatórios e respostas da API
"""

from datetime import datetime
from typing import Any, Dict, List, Optional, Tuple

from pydantic import Field

from .base_models import BaseEntity


class PhaseShiftRecord(BaseEntity):
    """Linha de saída de phase-shift (um canal)"""

    l: int = Field(..., description="Canal")
    k: Optional[float] = Field(default=None, description="Número de onda")
    delta: Optional[float] = Field(default=None, description="Defasagem δ_l")
    normalization: Optional[float] = Field(default=None, description="Constante N")
    lam: Optional[float] = Field(default=None, serialization_alias="lambda", description="Expoente λ")
    validity_score: Optional[float] = Field(default=None, description="β·r_c")
    status: str = Field(default="ok", description="ok ou código do erro do canal")


class BoundStateRecord(BaseEntity):
    """Linha de saída de bound-states"""

    n: int = Field(..., description="Número quântico radial")
    l: int = Field(..., description="Canal")
    energy: float = Field(..., serialization_alias="E", description="Energia E_{n,l}")
    residual: float = Field(..., description="|condição de polo|")


class DeviationRow(BaseEntity):
    """Comparação de um canal com o valor de referência"""

    l: int = Field(..., description="Canal")
    delta: float = Field(..., description="δ_l calculado")
    reference: float = Field(..., description="δ_l publicado")
    deviation: float = Field(..., description="δ_l − referência")


class BetaScanEntry(BaseEntity):
    """Resultado da varredura para um β e um conjunto de coeficientes"""

    beta: float = Field(..., description="Parâmetro de blindagem")
    coefficient_set: str = Field(..., description="repaired ou printed")
    deltas: List[float] = Field(..., description="δ_l para l = 0..l_max")
    max_abs_deviation: float = Field(..., description="max |δ_l − referência|")
    sign_mismatches: int = Field(..., description="Canais com sinal diferente da referência")
    pattern_match: bool = Field(..., description="Padrão qualitativo reproduzido")


class ScanReport(BaseEntity):
    """Relatório da varredura de β"""

    preset: str = Field(..., description="Preset de massas")
    l_max: int = Field(..., description="Maior canal comparado")
    feasible_upper_bound: float = Field(..., description="Maior β com todos os canais abertos")
    entries: List[BetaScanEntry] = Field(default_factory=list, description="Pontos da varredura")
    best_beta: float = Field(..., description="β de menor desvio máximo")
    best_coefficient_set: str = Field(..., description="Conjunto do melhor ajuste")
    best_max_abs_deviation: float = Field(..., description="Desvio máximo no melhor β")
    best_rows: List[DeviationRow] = Field(default_factory=list, description="Tabela de resíduos no melhor β")
    pattern_found: bool = Field(default=False, description="Algum β reproduz o padrão")


class ValidationCheck(BaseEntity):
    """Uma verificação do oráculo"""

    name: str = Field(..., description="Nome da verificação")
    preset: str = Field(..., description="Preset de massas")
    beta: float = Field(..., description="β")
    l: int = Field(..., description="Canal")
    value: float = Field(..., description="Desvio medido")
    tolerance: Optional[float] = Field(default=None, description="Tolerância (None = informativo)")
    passed: bool = Field(..., description="Passou")


class ValidationReport(BaseEntity):
    """Relatório do comando validate"""

    checks: List[ValidationCheck] = Field(default_factory=list, description="Verificações")
    worst_phase_deviation: float = Field(default=0.0, description="Pior |δ analítico − δ Numerov| mod π")
    worst_residual: float = Field(default=0.0, description="Pior resíduo da EDO")
    worst_amplitude_deviation: float = Field(default=0.0, description="Pior |A − 2|")
    max_beta_r: float = Field(default=0.0, description="Maior βr nas grades integradas")
    passed: bool = Field(default=True, description="Todas as verificações passaram")

    def family_summary(self) -> Dict[str, Tuple[bool, float]]:
        """(passou, pior desvio) por família de verificação, na ordem do relatório"""
        summary: Dict[str, Tuple[bool, float]] = {}
        for check in self.checks:
            passed, worst = summary.get(check.name, (True, 0.0))
            summary[check.name] = (passed and check.passed, max(worst, check.value))
        return summary


class ErrorResponse(BaseEntity):
    """Resposta de erro"""

    success: bool = Field(default=False, description="Se a operação foi bem-sucedida")
    message: str = Field(..., description="Mensagem de erro")
    error_code: str = Field(..., description="Código do erro")
    details: Optional[Any] = Field(default=None, description="Detalhes do erro")
    timestamp: datetime = Field(default_factory=datetime.now, description="Timestamp da resposta")


class HealthCheckResponse(BaseEntity):
    """Resposta do health check"""

    status: str = Field(default="healthy", description="Status do serviço")
    version: str = Field(default="1.0.0", description="Versão da aplicação")


class TableRow(BaseEntity):
    """Linha da comparação lado a lado dos dois presets de massas"""

    l: int = Field(..., description="Canal")
    delta_equal: Optional[float] = Field(default=None, description="δ_l com massas iguais")
    delta_unequal: Optional[float] = Field(default=None, description="δ_l com massas desiguais")
    reference_equal: Optional[float] = Field(default=None, description="δ_l publicado, massas iguais")
    reference_unequal: Optional[float] = Field(default=None, description="δ_l publicado, massas desiguais")
