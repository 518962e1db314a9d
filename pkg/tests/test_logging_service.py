"""
Testes do serviço de logging e das configurações
"""

import logging

from config.settings import Settings
from services.logging_service import LoggingService


class TestLoggingService:

    def test_messages_go_to_stderr(self, capsys):
        service = LoggingService("INFO")
        service.log_computation("phase-shift", beta=0.05, channels=21)
        service.log_validation("phase", False, 3.1e-3)
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "phase-shift | beta: 0.05 | channels: 21" in captured.err
        assert "phase - FAIL - pior desvio: 3.100e-03" in captured.err

    def test_level_filters(self, capsys):
        service = LoggingService("WARNING")
        service.log_info("silencioso")
        service.log_warning("visível")
        err = capsys.readouterr().err
        assert "silencioso" not in err
        assert "visível" in err

    def test_rotating_file(self, tmp_path):
        log_file = tmp_path / "logs" / "varshni.log"
        service = LoggingService("INFO", str(log_file), log_to_file=True)
        service.log_error(ValueError("falhou"), "scan-beta")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "Erro em scan-beta: falhou" in log_file.read_text(encoding="utf-8")


class TestSettings:

    def test_defaults(self):
        settings = Settings()
        assert settings.CSV_SIGNIFICANT_DIGITS == 12
        assert settings.get_hyp2f1_options() == {"tol": 1e-14, "max_terms": 100_000, "switch": 0.5}

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("PHASE_TOLERANCE", "0.01")
        monkeypatch.setenv("MAX_WORKERS", "1")
        settings = Settings()
        assert settings.PHASE_TOLERANCE == 0.01
        assert settings.MAX_WORKERS == 1
