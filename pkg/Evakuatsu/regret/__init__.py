"""
Минимакс сожаления Evakuatsu
"""

from .models import (
    G_J,
    G_IJ,
    BAR_G_IJ,
    H_I,
    H_IJ,
    BAR_H_IJ,
    RegretWitness,
    RegretReport,
    Term
)
from .families import (
    term_G_j,
    term_G_ij,
    term_barG_ij,
    term_H_i,
    term_H_ij,
    term_barH_ij,
    eval_G_j,
    eval_G_ij,
    eval_barG_ij,
    eval_H_i,
    eval_H_ij,
    eval_barH_ij
)
from ..profile import f_upper, f_upper_right
from .solver import RegretSolver, r_max, r_opt

__all__ = [
    # Семейства
    'G_J',
    'G_IJ',
    'BAR_G_IJ',
    'H_I',
    'H_IJ',
    'BAR_H_IJ',

    # Модели
    'RegretWitness',
    'RegretReport',
    'Term',

    # Слагаемые
    'term_G_j',
    'term_G_ij',
    'term_barG_ij',
    'term_H_i',
    'term_H_ij',
    'term_barH_ij',
    'eval_G_j',
    'eval_G_ij',
    'eval_barG_ij',
    'eval_H_i',
    'eval_H_ij',
    'eval_barH_ij',
    'f_upper',
    'f_upper_right',

    # Решатель
    'RegretSolver',
    'r_max',
    'r_opt'
]
