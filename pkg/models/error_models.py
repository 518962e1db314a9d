"""
Modelos de erro específicos para os diferentes cenários numéricos
"""
from typing import Optional, Dict, Any
from enum import Enum


class ErrorCode(str, Enum):
    """Códigos de erro padronizados"""
    # Erros de domínio (exit 2 / 422)
    DOMAIN_ERROR = "DOMAIN_ERROR"
    EVANESCENT_CHANNEL = "EVANESCENT_CHANNEL"
    SUPERCRITICAL_STRENGTH = "SUPERCRITICAL_STRENGTH"
    POLE_ERROR = "POLE_ERROR"
    DEGENERATE_CONNECTION = "DEGENERATE_CONNECTION"

    # Erros numéricos (exit 2 / 500)
    CONVERGENCE_ERROR = "CONVERGENCE_ERROR"
    ASYMPTOTIC_REGIME_NOT_REACHED = "ASYMPTOTIC_REGIME_NOT_REACHED"

    # Erros de configuração (exit 1 / 400)
    CONFIG_ERROR = "CONFIG_ERROR"
    USAGE_ERROR = "USAGE_ERROR"

    # Falha de validação (exit 3)
    VALIDATION_FAILED = "VALIDATION_FAILED"


class ScatteringError(Exception):
    """Erro base da biblioteca"""

    error_code: ErrorCode = ErrorCode.DOMAIN_ERROR

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        """Converte o erro para dicionário serializável"""
        return {
            "error_code": self.error_code.value,
            "message": self.message,
            "details": self.details,
        }


class DomainError(ScatteringError):
    """Parâmetro fora do domínio físico ou matemático"""
    error_code = ErrorCode.DOMAIN_ERROR


class EvanescentChannelError(DomainError):
    """Canal fechado: k² ≤ 0 no regime de espalhamento"""
    error_code = ErrorCode.EVANESCENT_CHANNEL


class SupercriticalStrengthError(DomainError):
    """Radicando de λ negativo (acoplamento supercrítico)"""
    error_code = ErrorCode.SUPERCRITICAL_STRENGTH


class PoleError(ScatteringError):
    """Argumento da função gama ou da série em um polo"""
    error_code = ErrorCode.POLE_ERROR


class DegenerateConnectionError(ScatteringError):
    """Fórmula de conexão z → 1−z com c−a−b inteiro"""
    error_code = ErrorCode.DEGENERATE_CONNECTION


class ConvergenceError(ScatteringError):
    """Série ou solver sem convergência dentro do limite"""
    error_code = ErrorCode.CONVERGENCE_ERROR


class AsymptoticRegimeError(ScatteringError):
    """Ajuste senoidal ruim: a solução não chegou à região assintótica"""
    error_code = ErrorCode.ASYMPTOTIC_REGIME_NOT_REACHED


class ConfigError(ScatteringError):
    """Configuração de integração ou de execução inválida"""
    error_code = ErrorCode.CONFIG_ERROR


class ValidationFailedError(ScatteringError):
    """Alguma verificação do oráculo excedeu a tolerância"""
    error_code = ErrorCode.VALIDATION_FAILED


class UsageError(ScatteringError):
    """Uso incorreto da linha de comando"""
    error_code = ErrorCode.USAGE_ERROR


class ErrorHandler:
    """Classe para construção centralizada de erros"""

    @staticmethod
    def handle_domain(field: str, value: Any, reason: str) -> DomainError:
        """Trata erro de parâmetro fora do domínio"""
        return DomainError(
            f"Valor inválido no campo '{field}': {reason}",
            {"field": field, "value": value, "reason": reason},
        )

    @staticmethod
    def handle_evanescent(l: int, k_squared: float) -> EvanescentChannelError:
        """Trata canal fechado (k² ≤ 0)"""
        return EvanescentChannelError(
            f"Canal l={l} fechado: k² = {k_squared:.6g} ≤ 0",
            {"l": l, "k_squared": k_squared},
        )

    @staticmethod
    def handle_supercritical(l: int, radicand: float) -> SupercriticalStrengthError:
        """Trata radicando de λ negativo"""
        return SupercriticalStrengthError(
            f"Acoplamento supercrítico no canal l={l}: radicando de λ = {radicand:.6g}",
            {"l": l, "radicand": radicand},
        )

    @staticmethod
    def handle_pole(argument: complex, context: Optional[str] = None) -> PoleError:
        """Trata argumento em polo (inteiro não positivo)"""
        details: Dict[str, Any] = {"argument": [argument.real, argument.imag]}
        if context:
            details["context"] = context
        return PoleError(f"Polo em {argument}", details)

    @staticmethod
    def handle_config(config_field: str, reason: str) -> ConfigError:
        """Trata erro de configuração inválida"""
        return ConfigError(
            f"Configuração inválida no campo '{config_field}': {reason}",
            {"field": config_field, "reason": reason},
        )


# Mapeamento de códigos de erro para códigos de saída da CLI
ERROR_EXIT_MAPPING = {
    ErrorCode.USAGE_ERROR: 1,
    ErrorCode.CONFIG_ERROR: 1,

    ErrorCode.DOMAIN_ERROR: 2,
    ErrorCode.EVANESCENT_CHANNEL: 2,
    ErrorCode.SUPERCRITICAL_STRENGTH: 2,
    ErrorCode.POLE_ERROR: 2,
    ErrorCode.DEGENERATE_CONNECTION: 2,
    ErrorCode.CONVERGENCE_ERROR: 2,
    ErrorCode.ASYMPTOTIC_REGIME_NOT_REACHED: 2,

    ErrorCode.VALIDATION_FAILED: 3,
}

# Mapeamento de códigos de erro para status HTTP
ERROR_STATUS_MAPPING = {
    ErrorCode.USAGE_ERROR: 400,
    ErrorCode.CONFIG_ERROR: 400,

    ErrorCode.DOMAIN_ERROR: 422,
    ErrorCode.EVANESCENT_CHANNEL: 422,
    ErrorCode.SUPERCRITICAL_STRENGTH: 422,
    ErrorCode.POLE_ERROR: 422,
    ErrorCode.DEGENERATE_CONNECTION: 422,

    ErrorCode.CONVERGENCE_ERROR: 500,
    ErrorCode.ASYMPTOTIC_REGIME_NOT_REACHED: 500,
    ErrorCode.VALIDATION_FAILED: 500,
}


def get_exit_code_for_error(error_code: ErrorCode) -> int:
    """Retorna o código de saída apropriado para um código de erro"""
    return ERROR_EXIT_MAPPING.get(error_code, 2)


def get_http_status_for_error(error_code: ErrorCode) -> int:
    """Retorna o status HTTP apropriado para um código de erro"""
    return ERROR_STATUS_MAPPING.get(error_code, 500)
