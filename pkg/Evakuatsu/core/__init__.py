"""
Ядро Evakuatsu: модель пути и время эвакуации
"""

from .logger import LoggingState, SolverLogger
from .sparse_table import SparseTable
from .models import (
    PathInstance,
    Scenario,
    Point,
    EvacResult,
    OptSink,
    ValidationIssue
)
from .path_model import (
    validate,
    prefix_weight,
    min_capacity,
    min_capacity_scan,
    two_varying,
    substitute,
    shift
)
from .evacuation import (
    g_i,
    h_i,
    theta,
    theta_min_on_edge,
    optimal_sink,
    regret
)

__all__ = [
    # Логирование
    'LoggingState',
    'SolverLogger',

    # Модели
    'SparseTable',
    'PathInstance',
    'Scenario',
    'Point',
    'EvacResult',
    'OptSink',
    'ValidationIssue',

    # Модель пути
    'validate',
    'prefix_weight',
    'min_capacity',
    'min_capacity_scan',
    'two_varying',
    'substitute',
    'shift',

    # Эвакуация
    'g_i',
    'h_i',
    'theta',
    'theta_min_on_edge',
    'optimal_sink',
    'regret'
]
