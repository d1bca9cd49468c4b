"""
Переборные оракулы Evakuatsu
"""

from .simulation import SimConfig, simulate_evacuation
from .grid import (
    GridConfig,
    grid_rmax,
    grid_rmax_scenario,
    sweep_ropt,
    grid_min_max,
    grid_min_max_y
)
from .checks import (
    ShiftViolation,
    ShiftReport,
    check_shift,
    random_instance,
    random_scenario,
    random_positive_pwl,
    theta_sampled,
    is_unimodal
)

__all__ = [
    # Симуляция
    'SimConfig',
    'simulate_evacuation',

    # Сетка
    'GridConfig',
    'grid_rmax',
    'grid_rmax_scenario',
    'sweep_ropt',
    'grid_min_max',
    'grid_min_max_y',

    # Проверки
    'ShiftViolation',
    'ShiftReport',
    'check_shift',
    'random_instance',
    'random_scenario',
    'random_positive_pwl',
    'theta_sampled',
    'is_unimodal'
]
