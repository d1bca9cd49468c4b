"""
Система логирования Evakuatsu
"""
import sys
from typing import Optional, TextIO


class LoggingState:
    """Глобальное состояние системы логирования"""
    enabled: bool = True
    verbose: bool = False
    stream: Optional[TextIO] = None

    @classmethod
    def initialize(cls, enabled: bool = True, verbose: bool = False, stream: Optional[TextIO] = None) -> None:
        """Инициализация состояния логирования"""
        cls.enabled = enabled
        cls.verbose = verbose
        cls.stream = stream

    @classmethod
    def reset(cls) -> None:
        """Сброс состояния логирования"""
        cls.enabled = True
        cls.verbose = False
        cls.stream = None


class SolverLogger:
    """Вывод хода вычислений в stderr (stdout занят JSON-ответом)"""

    @staticmethod
    def _emit(prefix: str, message: str) -> None:
        if not LoggingState.enabled:
            return
        print(f"{prefix} {message}", file=LoggingState.stream or sys.stderr)

    @classmethod
    def success(cls, message: str) -> None:
        cls._emit("✅", message)

    @classmethod
    def error(cls, message: str) -> None:
        cls._emit("❌", message)

    @classmethod
    def progress(cls, message: str) -> None:
        cls._emit("🔄", message)

    @classmethod
    def summary(cls, message: str) -> None:
        cls._emit("📊", message)

    @classmethod
    def warning(cls, message: str) -> None:
        cls._emit("⚠️", message)

    @classmethod
    def debug(cls, message: str) -> None:
        """Подробный вывод, только в режиме verbose"""
        if LoggingState.verbose:
            cls._emit("🔍", message)
