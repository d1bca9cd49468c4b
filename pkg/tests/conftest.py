import json
from fractions import Fraction

import numpy as np
import pytest

from Evakuatsu.core import LoggingState, PathInstance, Scenario
from Evakuatsu.utils import RunStats, SolverSettings, SolverState


@pytest.fixture(autouse=True)
def quiet_run():
    """Без вывода в stderr и с настройками по умолчанию"""
    LoggingState.initialize(enabled=False)
    SolverState.set(SolverSettings())
    RunStats.reset()
    yield
    LoggingState.reset()
    SolverState.reset()
    RunStats.reset()


@pytest.fixture
def t1():
    """Позиции [0, 1, 2], ёмкости [1, 2], все интервалы [0, 2]"""
    return PathInstance((0, 1, 2), (1, 2), (0, 0, 0), (2, 2, 2))


@pytest.fixture
def t1_mirror():
    """Зеркальный t1: ёмкости [2, 1]"""
    return PathInstance((0, 1, 2), (2, 1), (0, 0, 0), (2, 2, 2))


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def scenario(*weights):
    return Scenario(tuple(Fraction(w) for w in weights))


@pytest.fixture
def write_json(tmp_path):
    """Пишет объект в JSON-файл во временной папке и возвращает путь"""
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write
