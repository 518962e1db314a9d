"""
Modelos base da aplicação usando Pydantic e POO
"""

import math
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, validator

from .error_models import ErrorHandler


class PotentialMode(str, Enum):
    """Forma do coeficiente radial"""
    EXACT = "exact"
    APPROXIMATED = "approximated"


class CoefficientSet(str, Enum):
    """Conjunto de coeficientes w / raiz compartilhada s"""
    REPAIRED = "repaired"
    PRINTED = "printed"


class SolutionSource(str, Enum):
    """Origem das amostras de uma solução radial"""
    ANALYTIC = "analytic"
    ORACLE = "oracle"


class BaseEntity(BaseModel):
    """Classe base para todas as entidades"""

    class Config:
        from_attributes = True
        use_enum_values = True
        frozen = True
        arbitrary_types_allowed = True

    def to_dict(self) -> Dict[str, Any]:
        """Converte o modelo para dicionário"""
        return self.model_dump(mode='json')

    @classmethod
    def from_dict(cls, data: Dict[str, Any]):
        """Cria instância a partir de dicionário"""
        return cls(**data)


def _require_finite(field: str, value: float) -> float:
    if not math.isfinite(value):
        raise ErrorHandler.handle_domain(field, value, "deve ser finito")
    return value


def _require_positive(field: str, value: float, message: str = "deve ser positivo") -> float:
    _require_finite(field, value)
    if value <= 0:
        raise ErrorHandler.handle_domain(field, value, message)
    return value


class TwoBodyMasses(BaseEntity):
    """Massas das duas partículas (unidades naturais, ħ = c = 1)"""

    m1: float = Field(..., description="Massa da partícula 1")
    m2: float = Field(..., description="Massa da partícula 2")

    @validator('m1')
    def validate_m1(cls, v):
        """Massas devem ser positivas e finitas"""
        return _require_positive('m1', v, "massa deve ser positiva")

    @validator('m2')
    def validate_m2(cls, v):
        return _require_positive('m2', v, "massa deve ser positiva")


class KinematicContext(BaseEntity):
    """Contexto cinemático de um cálculo: μ, η, σ e energia"""

    mu: float = Field(..., description="Massa reduzida")
    eta: float = Field(..., description="Índice de massa")
    sigma: float = Field(..., description="Coeficiente relativístico (μ/η)³")
    energy: float = Field(..., description="Energia semi-relativística E_{n,l}")
    sigma_override: Optional[float] = Field(default=None, description="σ imposto no lugar da fórmula")

    @validator('mu')
    def validate_mu(cls, v):
        """μ e η devem ser positivos"""
        return _require_positive('mu', v)

    @validator('eta')
    def validate_eta(cls, v):
        return _require_positive('eta', v)

    @validator('energy')
    def validate_energy(cls, v):
        return _require_finite('energy', v)

    @validator('sigma')
    def validate_sigma(cls, v):
        return _require_finite('sigma', v)

    @validator('sigma_override')
    def validate_override(cls, v):
        """σ imposto deve ser positivo"""
        if v is None:
            return v
        _require_finite('sigma_override', v)
        if v <= 0:
            raise ErrorHandler.handle_domain('sigma_override', v, "σ deve ser positivo")
        return v


class VarshniParams(BaseEntity):
    """Parâmetros do potencial de Varshni V(r) = a(1 − (b/r)e^{−βr})"""

    a: float = Field(..., description="Intensidade (dimensão de energia)")
    b: float = Field(..., description="Intensidade (dimensão de comprimento)")
    beta: float = Field(..., description="Parâmetro de blindagem (inverso de comprimento)")

    @validator('a')
    def validate_a(cls, v):
        """Intensidades podem ter qualquer sinal, mas devem ser finitas"""
        return _require_finite('a', v)

    @validator('b')
    def validate_b(cls, v):
        return _require_finite('b', v)

    @validator('beta')
    def validate_beta(cls, v):
        """β deve ser positivo"""
        _require_finite('beta', v)
        if v <= 0:
            raise ErrorHandler.handle_domain('beta', v, "β deve ser positivo")
        return v


class Channel(BaseEntity):
    """Onda parcial de momento angular l"""

    l: int = Field(..., description="Número quântico de momento angular")

    @validator('l')
    def validate_l(cls, v):
        """l não pode ser negativo"""
        if v < 0:
            raise ErrorHandler.handle_domain('l', v, "l deve ser ≥ 0")
        return v


class Hyp2F1Params(BaseEntity):
    """Parâmetros de ₂F₁(p1, p2; p3; z) com z real em [0, 1)"""

    p1: complex = Field(..., description="Primeiro parâmetro")
    p2: complex = Field(..., description="Segundo parâmetro")
    p3: complex = Field(..., description="Terceiro parâmetro")
    z: float = Field(..., description="Argumento real em [0, 1)")
    one_minus_z: Optional[float] = Field(
        default=None, description="1 − z calculado sem cancelamento (ex.: e^{−βr})"
    )

    @validator('p1', 'p2', 'p3', pre=True)
    def coerce_complex(cls, v):
        """Aceita int/float e converte para complex"""
        return complex(v)

    @validator('z')
    def validate_z(cls, v):
        """z deve estar em [0, 1)"""
        if not (0.0 <= v < 1.0):
            raise ErrorHandler.handle_domain('z', v, "z deve estar em [0, 1)")
        return v

    @property
    def complement(self) -> float:
        """1 − z, preferindo o valor informado explicitamente"""
        return self.one_minus_z if self.one_minus_z is not None else 1.0 - self.z


class WaveParameters(BaseEntity):
    """Parâmetros de onda de um canal (n, l)"""

    lam: float = Field(..., description="Expoente λ do comportamento z^λ na origem")
    eta1: complex = Field(..., description="η₁ = λ − ik/β − s")
    eta2: complex = Field(..., description="η₂ = λ − ik/β + s")
    eta3: complex = Field(..., description="η₃ = 2λ")
    k: float = Field(..., description="Número de onda assintótico")
    beta: float = Field(..., description="Parâmetro de blindagem usado")
    w1: float = Field(..., description="Coeficiente de z² (com sinal −)")
    w2: float = Field(..., description="Coeficiente de z")
    w3: float = Field(..., description="Termo constante (com sinal −)")
    s: complex = Field(..., description="Raiz compartilhada por η₁ e η₂")
    coefficient_set: CoefficientSet = Field(default=CoefficientSet.REPAIRED)


class PhaseShiftResult(BaseEntity):
    """Resultado de defasagem e normalização de um canal"""

    l: int = Field(..., description="Canal")
    delta: float = Field(..., description="Defasagem δ_l (rad, ramo contínuo)")
    k: float = Field(..., description="Número de onda")
    normalization: float = Field(..., description="Constante de normalização N")
    lam: float = Field(..., description="Expoente λ")
    args: Tuple[float, float, float] = Field(
        ..., description="arg Γ(2ik/β), arg Γ(η₂*), arg Γ(η₁*)"
    )
    validity_score: float = Field(default=0.0, description="β·r_c do canal")

    @validator('normalization')
    def validate_normalization(cls, v):
        """N deve ser positiva e finita"""
        if not (math.isfinite(v) and v > 0):
            raise ErrorHandler.handle_domain('normalization', v, "N deve ser positiva e finita")
        return v

    @validator('delta')
    def validate_delta(cls, v):
        """δ deve ser finita"""
        return _require_finite('delta', v)


class RadialSolution(BaseEntity):
    """Função de onda radial amostrada em uma grade de r"""

    r_grid: np.ndarray = Field(..., description="Grade estritamente crescente de raios")
    psi: np.ndarray = Field(..., description="Amostras complexas de ψ")
    source: SolutionSource = Field(..., description="analytic ou oracle")

    @validator('r_grid', pre=True)
    def validate_grid(cls, v):
        """Grade positiva e estritamente crescente"""
        grid = np.asarray(v, dtype=float)
        if grid.ndim != 1 or grid.size < 2:
            raise ErrorHandler.handle_domain('r_grid', grid.size, "grade precisa de ao menos 2 pontos")
        if grid[0] <= 0 or np.any(np.diff(grid) <= 0):
            raise ErrorHandler.handle_domain('r_grid', float(grid[0]), "grade deve ser positiva e crescente")
        return grid

    @validator('psi', pre=True)
    def validate_psi(cls, v, values):
        """Amostras finitas, uma por ponto da grade"""
        psi = np.asarray(v, dtype=complex)
        grid = values.get('r_grid')
        if grid is not None and psi.shape != grid.shape:
            raise ErrorHandler.handle_domain('psi', psi.shape, "tamanho diferente da grade")
        if not np.all(np.isfinite(psi)):
            raise ErrorHandler.handle_domain('psi', None, "amostras não finitas")
        return psi


class BoundState(BaseEntity):
    """Estado ligado encontrado no polo da matriz S"""

    n: int = Field(..., description="Número quântico radial")
    l: int = Field(..., description="Canal")
    energy: float = Field(..., description="Energia E_{n,l}")
    residual: float = Field(..., description="|condição de polo| na energia retornada")


class IntegrationConfig(BaseEntity):
    """Configuração da integração de Numerov do oráculo"""

    r_min: Optional[float] = Field(default=None, description="Raio inicial (padrão h·max(1, √(l(l+1)/6)), h = max_step/k)")
    r_max: Optional[float] = Field(default=None, description="Raio final (padrão max(40/k, 30/β))")
    max_step: float = Field(default=0.05, description="Limite de k·Δr")
    fit_window: float = Field(default=0.25, description="Fração final da grade usada no ajuste")
    mode: PotentialMode = Field(default=PotentialMode.APPROXIMATED)

    @validator('max_step')
    def validate_step(cls, v):
        """0 < k·Δr < 0.5"""
        if not (0.0 < v < 0.5):
            raise ErrorHandler.handle_config('max_step', "deve estar em (0, 0.5)")
        return v

    @validator('fit_window')
    def validate_window(cls, v):
        """0 < janela < 1"""
        if not (0.0 < v < 1.0):
            raise ErrorHandler.handle_config('fit_window', "deve estar em (0, 1)")
        return v

    @validator('r_max')
    def validate_range(cls, v, values):
        """0 < r_min < r_max quando ambos informados"""
        r_min = values.get('r_min')
        if r_min is not None and r_min <= 0:
            raise ErrorHandler.handle_config('r_min', "deve ser positivo")
        if v is not None and r_min is not None and v <= r_min:
            raise ErrorHandler.handle_config('r_max', "deve ser maior que r_min")
        return v


class RunConfig(BaseEntity):
    """Configuração de uma execução da CLI ou da API"""

    m1: float = Field(..., description="Massa 1")
    m2: float = Field(..., description="Massa 2")
    sigma_override: Optional[float] = Field(default=None, description="σ imposto")
    a: float = Field(..., description="Intensidade a")
    b: float = Field(..., description="Intensidade b")
    beta: float = Field(..., description="Parâmetro de blindagem")
    energy: float = Field(..., description="Energia E")
    l_values: List[int] = Field(..., description="Canais a calcular")
    n_max: int = Field(default=0, description="Maior n procurado nos estados ligados")
    output_format: str = Field(default="csv", description="csv ou json")
    out: Optional[str] = Field(default=None, description="Arquivo de saída (stdout se ausente)")

    @validator('l_values')
    def validate_l_values(cls, v):
        """Canais não negativos e intervalo limitado"""
        if not v:
            raise ErrorHandler.handle_config('l', "nenhum canal informado")
        if any(l < 0 for l in v):
            raise ErrorHandler.handle_config('l', "l deve ser ≥ 0")
        if len(v) > 10_000:
            raise ErrorHandler.handle_config('l', "intervalo maior que 10⁴ canais")
        return v

    @validator('output_format')
    def validate_format(cls, v):
        """Formato de saída suportado"""
        if v not in ("csv", "json"):
            raise ErrorHandler.handle_config('format', "use csv ou json")
        return v

    @validator('n_max')
    def validate_n_max(cls, v):
        """n_max não negativo"""
        if v < 0:
            raise ErrorHandler.handle_config('n_max', "deve ser ≥ 0")
        return v

    def masses(self) -> TwoBodyMasses:
        """Retorna as massas da execução"""
        return TwoBodyMasses(m1=self.m1, m2=self.m2)

    def potential(self) -> VarshniParams:
        """Retorna os parâmetros do potencial da execução"""
        return VarshniParams(a=self.a, b=self.b, beta=self.beta)


def parse_l_spec(spec: str, guard: int = 10_000) -> List[int]:
    """
    Converte "5" ou "0..20" na lista de canais

    Raises:
        ConfigError: formato inválido, intervalo vazio ou maior que o limite
    """
    text = str(spec).strip()
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ErrorHandler.handle_config('l', f"use um inteiro ou lo..hi, recebido '{spec}'")
    if lo < 0 or hi < lo:
        raise ErrorHandler.handle_config('l', f"intervalo inválido '{spec}'")
    if hi - lo + 1 > guard:
        raise ErrorHandler.handle_config('l', f"intervalo com mais de {guard} canais")
    return list(range(lo, hi + 1))


class RunRequest(BaseEntity):
    """Parâmetros de uma execução como chegam da CLI ou da API"""

    m1: Optional[float] = Field(default=None, description="Massa 1 (padrão 1 ou do preset)")
    m2: Optional[float] = Field(default=None, description="Massa 2 (padrão 1 ou do preset)")
    sigma: Optional[float] = Field(default=None, description="σ imposto")
    a: float = Field(default=0.15, description="Intensidade a")
    b: float = Field(default=0.15, description="Intensidade b")
    beta: float = Field(default=0.05, description="Parâmetro de blindagem")
    energy: float = Field(default=1.0, description="Energia E")
    l: str = Field(default="0", description="Canal único ou intervalo lo..hi")
    n_max: int = Field(default=0, description="Maior n dos estados ligados")
    preset: Optional[str] = Field(default=None, description="equal ou unequal")
    output_format: str = Field(default="csv", description="csv ou json")
    out: Optional[str] = Field(default=None, description="Arquivo de saída")

    @validator('l', pre=True)
    def coerce_l(cls, v):
        """Aceita inteiro ou texto"""
        return str(v)

    def to_run_config(self, guard: int = 10_000) -> RunConfig:
        """Aplica o preset (flags explícitas têm precedência) e valida"""
        m1, m2, sigma = 1.0, 1.0, None
        if self.preset is not None:
            from .reference_data import get_preset
            preset = get_preset(self.preset)
            m1, m2, sigma = preset.m1, preset.m2, preset.sigma_override
        return RunConfig(
            m1=self.m1 if self.m1 is not None else m1,
            m2=self.m2 if self.m2 is not None else m2,
            sigma_override=self.sigma if self.sigma is not None else sigma,
            a=self.a,
            b=self.b,
            beta=self.beta,
            energy=self.energy,
            l_values=parse_l_spec(self.l, guard),
            n_max=self.n_max,
            output_format=self.output_format,
            out=self.out,
        )
