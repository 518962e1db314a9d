"""
Configurações da aplicação usando Pydantic Settings
"""

from pydantic_settings import BaseSettings
from pydantic import Field
import os

class Settings(BaseSettings):
    """Classe de configurações da aplicação usando POO"""

    # Configurações do servidor
    HOST: str = Field(default="0.0.0.0", description="Host do servidor")
    PORT: int = Field(default=8000, description="Porta do servidor")
    DEBUG: bool = Field(default=False, description="Modo debug")

    # Configurações de logs
    LOG_LEVEL: str = Field(default="INFO", description="Nível de log")
    LOG_FILE: str = Field(default="logs/varshni.log", description="Arquivo de log")
    LOGS_DIR: str = Field(default="logs", description="Diretório para logs")
    LOG_TO_FILE: bool = Field(default=False, description="Grava logs em arquivo além do stderr")

    # Execução das varreduras
    MAX_WORKERS: int = Field(default=4, description="Largura do map paralelo nas varreduras")
    L_RANGE_GUARD: int = Field(default=10_000, description="Tamanho máximo de um intervalo de l")
    CSV_SIGNIFICANT_DIGITS: int = Field(default=12, description="Dígitos significativos na saída")
    BETA_SCAN_POINTS: int = Field(default=200, description="Pontos da grade de β na varredura")

    # Funções especiais
    HYP2F1_TOL: float = Field(default=1e-14, description="Tolerância relativa da série 2F1")
    HYP2F1_MAX_TERMS: int = Field(default=100_000, description="Número máximo de termos da série 2F1")
    HYP2F1_SWITCH: float = Field(default=0.5, description="Ponto de troca série/fórmula de conexão")

    # Estados ligados
    BOUND_SCAN_POINTS: int = Field(default=2000, description="Pontos da varredura de energia")
    BOUND_ENERGY_TOL: float = Field(default=1e-12, description="Tolerância em energia do refinamento")

    # Oráculo numérico e validação
    ORACLE_MAX_STEP: float = Field(default=0.05, description="Passo máximo k·Δr do Numerov")
    ORACLE_FIT_WINDOW: float = Field(default=0.25, description="Fração final da grade usada no ajuste de fase")
    PHASE_TOLERANCE: float = Field(default=2e-3, description="Tolerância de fase (rad) analítico vs Numerov")
    RESIDUAL_TOLERANCE: float = Field(default=1e-6, description="Tolerância do resíduo da EDO")
    AMPLITUDE_TOLERANCE: float = Field(default=1e-3, description="Tolerância da amplitude assintótica")

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True

    def __init__(self, **kwargs):
        """Inicializa as configurações e cria diretórios necessários"""
        super().__init__(**kwargs)
        self._create_directories()

    def _create_directories(self) -> None:
        """Cria o diretório de logs apenas quando o log em arquivo está ativo"""
        if self.LOG_TO_FILE:
            os.makedirs(self.LOGS_DIR, exist_ok=True)

    @property
    def is_development(self) -> bool:
        """Verifica se está em modo de desenvolvimento"""
        return self.DEBUG

    def get_hyp2f1_options(self) -> dict:
        """Retorna as opções numéricas da 2F1"""
        return {
            "tol": self.HYP2F1_TOL,
            "max_terms": self.HYP2F1_MAX_TERMS,
            "switch": self.HYP2F1_SWITCH,
        }
