"""
Funções especiais complexas: log-gama contínua, arg Γ e a hipergeométrica
de Gauss ₂F₁ com a fórmula de conexão z → 1−z
"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy import special

from models.base_models import Hyp2F1Params
from models.error_models import (
    ConvergenceError,
    DegenerateConnectionError,
    ErrorHandler,
)

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-14
DEFAULT_MAX_TERMS = 100_000
DEFAULT_SWITCH = 0.5

# perda tolerada: maior |termo| somado sobre max(1, |valor|)
RETRY_CANCELLATION = 1e4
CANCELLATION_LIMIT = 1e6

_INTEGER_EPS = 1e-12

ComplexLike = Union[complex, float, np.ndarray]


def _is_nonpositive_integer(value: complex) -> bool:
    value = complex(value)
    if abs(value.imag) > _INTEGER_EPS or value.real > _INTEGER_EPS:
        return False
    return abs(value.real - round(value.real)) < _INTEGER_EPS


def _is_integer(value: complex) -> bool:
    value = complex(value)
    return abs(value.imag) <= _INTEGER_EPS and abs(value.real - round(value.real)) <= _INTEGER_EPS


def log_gamma(z: ComplexLike) -> ComplexLike:
    """
    log Γ(z) analítica, com parte imaginária contínua (não reduzida a (−π, π])

    Usa scipy.special.loggamma, que satisfaz lg(z+1) = lg(z) + log(z) sem
    saltos de 2π. Aceita escalares ou arrays.

    Raises:
        PoleError: z inteiro não positivo
    """
    values = np.asarray(z, dtype=complex)
    for value in values.ravel():
        if _is_nonpositive_integer(value):
            raise ErrorHandler.handle_pole(complex(value), "log_gamma")
    result = special.loggamma(values)
    return complex(result) if values.ndim == 0 else result


def arg_gamma(z: ComplexLike) -> Union[float, np.ndarray]:
    """arg Γ(z) contínuo: parte imaginária de log_gamma"""
    result = np.imag(log_gamma(z))
    return float(result) if np.ndim(result) == 0 else result


def _gamma_ratio(numerator: Sequence[complex], denominator: Sequence[complex]) -> complex:
    """Π Γ(num) / Π Γ(den) em escala logarítmica; 1/Γ em polo vale zero"""
    if any(_is_nonpositive_integer(value) for value in denominator):
        return 0j
    log_value = sum(log_gamma(value) for value in numerator)
    log_value -= sum(log_gamma(value) for value in denominator)
    return complex(np.exp(log_value))


def _direct_series(a: complex, b: complex, c: complex, z: np.ndarray,
                   tol: float, max_terms: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Soma Σ (a)_n(b)_n/((c)_n n!) zⁿ para todos os z da grade ao mesmo tempo

    Returns:
        (soma, maior |termo|); a razão entre os dois mede o cancelamento
    """
    z = np.asarray(z, dtype=float)
    total = np.ones(z.shape, dtype=complex)
    term = np.ones(z.shape, dtype=complex)
    peak = np.ones(z.shape, dtype=float)
    if z.size == 0:
        return total, peak
    z_max = float(np.max(z))

    with np.errstate(over='ignore', invalid='ignore'):
        for n in range(max_terms):
            ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0))
            term = term * ratio * z
            total = total + term
            size = np.abs(term)
            peak = np.fmax(peak, size)
            # pontos que estouraram saem do critério; o pico infinito os descarta depois
            settled = ~np.isfinite(size) | (size <= tol * np.abs(total))
            if abs(ratio) * z_max < 1.0 and np.all(settled):
                return total, peak

    raise ConvergenceError(
        f"Série ₂F₁ não convergiu em {max_terms} termos",
        {"p1": [a.real, a.imag], "p2": [b.real, b.imag], "p3": [c.real, c.imag],
         "z_max": z_max},
    )


def _connection(a: complex, b: complex, c: complex, w: np.ndarray,
                tol: float, max_terms: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Fórmula de conexão z → w = 1−z

    F(a,b;c;z) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)) F(a,b;a+b−c+1;w)
               + w^{c−a−b} Γ(c)Γ(a+b−c)/(Γ(a)Γ(b)) F(c−a,c−b;c−a−b+1;w)

    Returns:
        (valor, escala das parcelas somadas em módulo)
    """
    d = c - a - b
    first = _gamma_ratio([c, d], [c - a, c - b])
    second = _gamma_ratio([c, -d], [a, b])

    result = np.zeros(w.shape, dtype=complex)
    scale = np.zeros(w.shape, dtype=float)
    if first != 0:
        values, peak = _direct_series(a, b, 1.0 - d, w, tol, max_terms)
        result += first * values
        scale += abs(first) * peak
    if second != 0:
        power = np.exp(d * np.log(w))
        values, peak = _direct_series(c - a, c - b, 1.0 + d, w, tol, max_terms)
        result += second * power * values
        scale += abs(second) * np.abs(power) * peak
    return result, scale


def _cancellation(value: np.ndarray, scale: np.ndarray) -> np.ndarray:
    """Fator de perda por cancelamento, relativo a max(1, |valor|)"""
    with np.errstate(invalid='ignore'):
        loss = scale / np.fmax(1.0, np.abs(value))
    return np.where(np.isfinite(value), loss, np.inf)


def _check_cancellation(value: np.ndarray, scale: np.ndarray, a: complex, b: complex,
                        c: complex, z: np.ndarray, path: str) -> None:
    loss = _cancellation(value, scale)
    if np.all(loss <= CANCELLATION_LIMIT):
        return
    worst = int(np.argmax(loss))
    raise ConvergenceError(
        f"₂F₁ por {path} perde precisão por cancelamento (fator {float(loss[worst]):.3g})",
        {"p1": [a.real, a.imag], "p2": [b.real, b.imag], "p3": [c.real, c.imag],
         "z": float(z.ravel()[worst])},
    )


def hyp2f1_grid(p1: complex, p2: complex, p3: complex, z: np.ndarray,
                one_minus_z: Optional[np.ndarray] = None,
                tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS,
                switch: float = DEFAULT_SWITCH,
                degenerate_fallback: bool = False) -> np.ndarray:
    """
    ₂F₁(p1, p2; p3; z) em uma grade real z ∈ [0, 1)

    Até o switch soma a série direta; acima usa a fórmula de conexão. Com
    parâmetros grandes (|p1|z ≫ 1, regime de espalhamento com k/β alto) a
    série direta cancela e o ponto é refeito pela conexão, ficando com o
    caminho de menor erro de arredondamento estimado.

    Args:
        p1, p2, p3: Parâmetros complexos
        z: Argumentos em [0, 1)
        one_minus_z: 1 − z sem cancelamento (ex.: e^{−βr}); opcional
        tol: Tolerância relativa da série
        max_terms: Limite de termos da série
        switch: Acima deste z usa a fórmula de conexão
        degenerate_fallback: Com p3 − p1 − p2 inteiro, soma a série direta
            acima do switch em vez de levantar DegenerateConnectionError

    Returns:
        Array complexo com o formato de z

    Raises:
        PoleError: p3 inteiro não positivo
        DomainError: z fora de [0, 1)
        DegenerateConnectionError: p3 − p1 − p2 inteiro acima do switch
        ConvergenceError: série sem convergência ou cancelamento sem saída
    """
    a, b, c = complex(p1), complex(p2), complex(p3)
    if _is_nonpositive_integer(c):
        raise ErrorHandler.handle_pole(c, "hyp2f1: p3 inteiro não positivo")

    z = np.asarray(z, dtype=float)
    if np.any(z < 0) or np.any(z >= 1):
        raise ErrorHandler.handle_domain('z', float(np.max(z)), "z deve estar em [0, 1)")
    w = 1.0 - z if one_minus_z is None else np.asarray(one_minus_z, dtype=float)
    degenerate = _is_integer(c - a - b)

    result = np.empty(z.shape, dtype=complex)
    scale = np.empty(z.shape, dtype=float)
    near = z <= switch
    far = ~near
    if np.any(near):
        result[near], scale[near] = _direct_series(a, b, c, z[near], tol, max_terms)
    if np.any(far):
        if degenerate:
            if not degenerate_fallback:
                raise DegenerateConnectionError(
                    "p3 − p1 − p2 inteiro: fórmula de conexão degenerada",
                    {"difference": [(c - a - b).real, (c - a - b).imag],
                     "z_max": float(np.max(z))},
                )
            logger.debug("p3 − p1 − p2 inteiro; usando série direta acima do switch")
            result[far], scale[far] = _direct_series(a, b, c, z[far], tol, max_terms)
        else:
            result[far], scale[far] = _connection(a, b, c, w[far], tol, max_terms)

    retry = near & (_cancellation(result, scale) > RETRY_CANCELLATION)
    if np.any(retry) and not degenerate:
        values, connection_scale = _connection(a, b, c, w[retry], tol, max_terms)
        # escala infinita ou nan da série direta perde para a conexão
        better = ~(scale[retry] <= connection_scale)
        index = np.flatnonzero(retry)[better]
        result[index] = values[better]
        scale[index] = connection_scale[better]
        logger.debug(f"₂F₁: {index.size} ponto(s) da série direta refeitos pela conexão")

    _check_cancellation(result, scale, a, b, c, z, "série/conexão")
    return result


def hyp2f1(params: Hyp2F1Params, tol: float = DEFAULT_TOL,
           max_terms: int = DEFAULT_MAX_TERMS, switch: float = DEFAULT_SWITCH,
           degenerate_fallback: bool = False) -> complex:
    """₂F₁(p1, p2; p3; z) para um único z"""
    one_minus_z = None if params.one_minus_z is None else np.array([params.one_minus_z])
    value = hyp2f1_grid(
        params.p1, params.p2, params.p3, np.array([params.z]), one_minus_z,
        tol=tol, max_terms=max_terms, switch=switch,
        degenerate_fallback=degenerate_fallback,
    )
    return complex(value[0])


def hyp2f1_series(params: Hyp2F1Params, tol: float = DEFAULT_TOL,
                  max_terms: int = DEFAULT_MAX_TERMS) -> complex:
    """
    Série direta em qualquer z ∈ [0, 1), sem a fórmula de conexão

    Raises:
        ConvergenceError: sem convergência, ou termos que cancelam além de
            CANCELLATION_LIMIT (o resultado não teria dígitos confiáveis)
    """
    a, b, c = complex(params.p1), complex(params.p2), complex(params.p3)
    z = np.array([params.z])
    value, peak = _direct_series(a, b, c, z, tol, max_terms)
    _check_cancellation(value, peak, a, b, c, z, "série direta")
    return complex(value[0])


def hyp2f1_connection(params: Hyp2F1Params, tol: float = DEFAULT_TOL,
                      max_terms: int = DEFAULT_MAX_TERMS) -> complex:
    """Fórmula de conexão em qualquer z ∈ (0, 1), sem a série direta"""
    a, b, c = complex(params.p1), complex(params.p2), complex(params.p3)
    if _is_nonpositive_integer(c):
        raise ErrorHandler.handle_pole(c, "hyp2f1: p3 inteiro não positivo")
    if _is_integer(c - a - b):
        raise DegenerateConnectionError(
            "p3 − p1 − p2 inteiro: fórmula de conexão degenerada",
            {"difference": [(c - a - b).real, (c - a - b).imag]},
        )
    value, scale = _connection(a, b, c, np.array([params.complement]), tol, max_terms)
    _check_cancellation(value, scale, a, b, c, np.array([params.z]), "fórmula de conexão")
    return complex(value[0])
