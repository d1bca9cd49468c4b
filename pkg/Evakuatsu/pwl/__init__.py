"""
Кусочно-линейные функции Evakuatsu
"""

from .function import Line, PwlFunction, PartialPwl, evaluate
from .algebra import (
    Difference,
    upper_envelope,
    inverse,
    add,
    add_line,
    add_constant,
    scale,
    shift_arg,
    restrict,
    merge_min,
    merge_max,
    max_difference
)

__all__ = [
    # Типы
    'Line',
    'PwlFunction',
    'PartialPwl',
    'Difference',

    # Операции
    'evaluate',
    'upper_envelope',
    'inverse',
    'add',
    'add_line',
    'add_constant',
    'scale',
    'shift_arg',
    'restrict',
    'merge_min',
    'merge_max',
    'max_difference'
]
