"""
Загрузка настроек решателя: data/config.yaml + переменные окружения (.env)
"""
import os
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from .errors import InputFileError

DEFAULT_CONFIG_PATH = os.path.join("data", "config.yaml")


@dataclass(frozen=True)
class SolverSettings:
    """Значения по умолчанию для оракулов и вывода"""
    grid_divisions: int = 64
    dt_divisions: int = 1024
    max_time: int = 10_000
    shift_trials: int = 1000
    seed: int = 42
    sweep_samples: int = 64
    decimals: int = 12
    quiet: bool = False

    def __post_init__(self):
        for name in ("grid_divisions", "dt_divisions", "max_time", "shift_trials", "sweep_samples"):
            if getattr(self, name) <= 0:
                raise InputFileError(f"Настройка {name} должна быть положительной")

    @classmethod
    def load(cls, path: Optional[str] = None) -> "SolverSettings":
        """
        Читает YAML-файл настроек и применяет переопределения из окружения

        Args:
            path: путь к YAML; по умолчанию EVAKUATSU_CONFIG или data/config.yaml
        Returns:
            SolverSettings: итоговые настройки
        """
        load_dotenv()
        path = path or os.getenv("EVAKUATSU_CONFIG") or DEFAULT_CONFIG_PATH
        values: Dict[str, Any] = {}
        if os.path.exists(path):
            try:
                with open(path, "r", encoding="utf-8") as f:
                    raw = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise InputFileError(f"Не удалось прочитать {path}: {e}") from e
            if not isinstance(raw, dict):
                raise InputFileError(f"{path}: ожидался словарь настроек")
            values.update(_flatten(raw))

        seed = os.getenv("EVAKUATSU_SEED")
        if seed:
            values["seed"] = seed
        quiet = os.getenv("EVAKUATSU_QUIET")
        if quiet:
            values["quiet"] = quiet.strip().lower() in ("1", "true", "yes", "on")

        known = {name: value for name, value in values.items() if name in cls.__dataclass_fields__}
        try:
            typed = {
                name: (bool(value) if name == "quiet" else int(value))
                for name, value in known.items()
            }
        except (TypeError, ValueError) as e:
            raise InputFileError(f"Некорректное значение настройки: {e}") from e
        return cls(**typed)

    def with_overrides(self, **changes) -> "SolverSettings":
        """Копия настроек с изменёнными полями (None пропускается)"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _flatten(raw: Dict[str, Any]) -> Dict[str, Any]:
    """Секции YAML (oracle:, output:, ...) сводятся в плоский словарь"""
    flat: Dict[str, Any] = {}
    for key, value in raw.items():
        if isinstance(value, dict):
            flat.update(value)
        else:
            flat[key] = value
    return flat


class SolverState:
    """Глобальные настройки текущего запуска"""
    _settings: Optional[SolverSettings] = None

    @classmethod
    def settings(cls) -> SolverSettings:
        """Возвращает настройки, загружая их при первом обращении"""
        if cls._settings is None:
            cls._settings = SolverSettings.load()
        return cls._settings

    @classmethod
    def set(cls, settings: SolverSettings) -> None:
        cls._settings = settings

    @classmethod
    def reset(cls) -> None:
        """Сбрасывает загруженные настройки"""
        cls._settings = None
