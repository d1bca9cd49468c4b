"""
Evakuatsu - минимакс сожаления для размещения стока на динамическом пути.
Время эвакуации, огибающие и профили в точной арифметике, переборные оракулы и CLI.
"""

# --- Версия и информация ---
__version__ = "alpha-1"
__author__ = "Entaytion"
__license__ = "GNU General Public License v3.0"

# --- Утилиты ---
from .utils import (
    EvakuatsuError,
    InstanceError,
    ScenarioError,
    PwlError,
    ProfileError,
    OracleError,
    InputFileError,
    Emojis,
    SolverSettings,
    SolverState,
    RunStats
)

# --- Ядро ---
from .core import (
    LoggingState,
    SolverLogger,
    PathInstance,
    Scenario,
    Point,
    EvacResult,
    OptSink,
    validate,
    two_varying,
    theta,
    optimal_sink,
    regret
)

# --- Кусочно-линейные функции ---
from .pwl import (
    Line,
    PwlFunction,
    PartialPwl
)

# --- Профили ---
from .profile import (
    Box,
    Profile,
    ProfileManager,
    min_max_profile,
    min_max_y_profile
)

# --- Сожаление ---
from .regret import (
    RegretSolver,
    RegretReport,
    r_max,
    r_opt
)

# --- Файлы ---
from .utils.files import (
    load_instance,
    load_scenario,
    dump_instance,
    dump_pwl_csv
)

__all__ = [
    # Утилиты
    "EvakuatsuError",
    "InstanceError",
    "ScenarioError",
    "PwlError",
    "ProfileError",
    "OracleError",
    "InputFileError",
    "Emojis",
    "SolverSettings",
    "SolverState",
    "RunStats",

    # Ядро
    "LoggingState",
    "SolverLogger",
    "PathInstance",
    "Scenario",
    "Point",
    "EvacResult",
    "OptSink",
    "validate",
    "two_varying",
    "theta",
    "optimal_sink",
    "regret",

    # Кусочно-линейные функции
    "Line",
    "PwlFunction",
    "PartialPwl",

    # Профили
    "Box",
    "Profile",
    "ProfileManager",
    "min_max_profile",
    "min_max_y_profile",

    # Сожаление
    "RegretSolver",
    "RegretReport",
    "r_max",
    "r_opt",

    # Файлы
    "load_instance",
    "load_scenario",
    "dump_instance",
    "dump_pwl_csv"
]
