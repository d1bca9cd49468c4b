import sys
from collections import defaultdict

from ..core.logger import LoggingState
from .constants import Emojis


class RunStats:
    _built = defaultdict(lambda: {'built': 0, 'cached': 0})

    @classmethod
    def record(cls, kind: str, cached: bool = False):
        """Учитывает построенный (или взятый из кэша) объект

        Args:
            kind (str): Вид объекта, например "medge" или "mk"
            cached (bool): Взят ли объект из кэша
        """
        status = 'cached' if cached else 'built'
        cls._built[kind][status] += 1

    @classmethod
    def add(cls, kind: str, amount: int):
        """Добавляет amount шагов к счётчику операций kind"""
        cls._built[kind]['built'] += amount

    @classmethod
    def count(cls, kind: str, cached: bool = False) -> int:
        return cls._built[kind]['cached' if cached else 'built'] if kind in cls._built else 0

    @classmethod
    def reset(cls):
        cls._built.clear()

    @classmethod
    def print_summary(cls):
        """Выводит статистику построений в красивом формате"""
        if not LoggingState.enabled:
            return
        out = LoggingState.stream or sys.stderr
        print("\n=== Построенные функции ===", file=out)
        for kind in sorted(cls._built):
            status = cls._built[kind]
            if not status['built'] and not status['cached']:
                continue
            print(
                f"{Emojis.FOLDER} {kind}: ├─ {Emojis.SUCCESS} {status['built']} построено, "
                f"{Emojis.CACHED} {status['cached']} из кэша",
                file=out
            )
        print("===========================\n", file=out)
