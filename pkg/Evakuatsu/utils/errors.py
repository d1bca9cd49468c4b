"""
Исключения Evakuatsu
"""


class EvakuatsuError(ValueError):
    """Базовая ошибка пакета"""


class InstanceError(EvakuatsuError):
    """Некорректный путь или индекс вне диапазона"""


class ScenarioError(EvakuatsuError):
    """Некорректный сценарий, двухпараметрический сценарий или SHIFT"""


class PwlError(EvakuatsuError):
    """Ошибка кусочно-линейной алгебры"""


class ProfileError(EvakuatsuError):
    """Некорректные входы профилей минимальной эвакуации"""


class OracleError(EvakuatsuError):
    """Ошибка переборных проверок"""


class InputFileError(EvakuatsuError):
    """Ошибка чтения входного файла"""

    def __init__(self, message: str, issues=None):
        super().__init__(message)
        self.issues = list(issues or [])
