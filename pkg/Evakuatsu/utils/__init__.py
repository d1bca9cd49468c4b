"""
Утилиты Evakuatsu
"""

from .errors import (
    EvakuatsuError,
    InstanceError,
    ScenarioError,
    PwlError,
    ProfileError,
    OracleError,
    InputFileError
)
from .rational import (
    Rational,
    parse_rational,
    as_fraction,
    format_rational,
    to_decimal,
    rational_fields
)
from .constants import Emojis, Families
from .config_loader import SolverSettings, SolverState
from .run_stats import RunStats

__all__ = [
    # Ошибки
    'EvakuatsuError',
    'InstanceError',
    'ScenarioError',
    'PwlError',
    'ProfileError',
    'OracleError',
    'InputFileError',

    # Рациональные числа
    'Rational',
    'parse_rational',
    'as_fraction',
    'format_rational',
    'to_decimal',
    'rational_fields',

    # Константы
    'Emojis',
    'Families',

    # Настройки и статистика
    'SolverSettings',
    'SolverState',
    'RunStats'
]
