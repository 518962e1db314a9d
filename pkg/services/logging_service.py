"""
Serviço de logging da aplicação usando programação orientada a objetos
"""

import logging
import logging.handlers
import os
import sys
from typing import Any, Optional


class LoggingService:
    """Classe para gerenciar o sistema de logs da aplicação"""

    FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    DATEFMT = '%Y-%m-%d %H:%M:%S'

    def __init__(self, log_level: str = "INFO", log_file: str = "logs/varshni.log",
                 log_to_file: bool = False):
        """
        Inicializa o serviço de logging

        Args:
            log_level: Nível de log (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_file: Caminho para o arquivo de log
            log_to_file: Se True, grava também em arquivo rotativo
        """
        self.log_level = getattr(logging, log_level.upper(), logging.INFO)
        self.log_file = log_file
        self.log_to_file = log_to_file
        self._setup_logging()

    def _setup_logging(self) -> None:
        """Configura o logger raiz com StreamHandler (stderr) e, opcionalmente, arquivo rotativo"""
        formatter = logging.Formatter(self.FORMAT, datefmt=self.DATEFMT)

        # stdout fica reservado para CSV/JSON
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(formatter)
        handlers = [stream_handler]

        if self.log_to_file:
            log_dir = os.path.dirname(self.log_file)
            if log_dir:
                os.makedirs(log_dir, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                self.log_file,
                maxBytes=10*1024*1024,  # 10MB
                backupCount=5,
                encoding='utf-8'
            )
            file_handler.setFormatter(formatter)
            handlers.append(file_handler)

        logging.basicConfig(level=self.log_level, handlers=handlers, force=True)

    def get_logger(self, name: str) -> logging.Logger:
        """
        Retorna um logger com o nome especificado

        Args:
            name: Nome do logger (geralmente __name__ do módulo)

        Returns:
            Logger configurado
        """
        return logging.getLogger(name)

    def log_computation(self, command: str, **fields: Any) -> None:
        """
        Registra a execução de um comando de cálculo

        Args:
            command: Nome do comando (phase-shift, scan-beta, ...)
            **fields: Parâmetros relevantes da execução
        """
        logger = self.get_logger("computation")
        details = " | ".join(f"{key}: {value}" for key, value in fields.items())
        logger.info(f"{command} | {details}" if details else command)

    def log_validation(self, check: str, passed: bool, worst: Optional[float] = None) -> None:
        """
        Registra o resultado de uma verificação do oráculo

        Args:
            check: Nome da verificação
            passed: Se a verificação passou
            worst: Pior desvio encontrado
        """
        logger = self.get_logger("validation")
        status = "PASS" if passed else "FAIL"
        message = f"{check} - {status}"
        if worst is not None:
            message += f" - pior desvio: {worst:.3e}"

        if passed:
            logger.info(message)
        else:
            logger.error(message)

    def log_info(self, message: str) -> None:
        """Registra uma mensagem de informação"""
        logging.getLogger(__name__).info(message)

    def log_warning(self, message: str) -> None:
        """Registra uma mensagem de aviso"""
        logging.getLogger(__name__).warning(message)

    def log_error(self, error: Exception, context: str = "") -> None:
        """
        Registra erros com contexto adicional

        Args:
            error: Exceção capturada
            context: Contexto adicional sobre o erro
        """
        logger = logging.getLogger(__name__)
        message = f"Erro em {context}: {str(error)}" if context else str(error)
        logger.error(message, exc_info=self.log_level <= logging.DEBUG)
