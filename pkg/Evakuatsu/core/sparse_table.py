"""
Разреженная таблица для запросов минимума на отрезке
"""
from typing import List, Sequence, TypeVar

T = TypeVar("T")


class SparseTable:
    """
    Минимум на отрезке массива: построение O(n log n), запрос O(1)
    """

    def __init__(self, values: Sequence[T]):
        """
        Args:
            values: статический массив сравнимых значений
        """
        self.values = list(values)
        n = len(self.values)

        # Предвычисленные логарифмы
        self.log = [0] * (n + 1)
        for i in range(2, n + 1):
            self.log[i] = self.log[i // 2] + 1

        # Строка j хранит минимумы отрезков длины 2^j
        self.table: List[List[T]] = [self.values[:]] if n else []
        j = 1
        while (1 << j) <= n:
            prev = self.table[j - 1]
            half = 1 << (j - 1)
            self.table.append([
                min(prev[i], prev[i + half])
                for i in range(n - (1 << j) + 1)
            ])
            j += 1

    def __len__(self) -> int:
        return len(self.values)

    def query(self, left: int, right: int) -> T:
        """
        Минимум на отрезке [left, right] (включительно)
        """
        if left < 0 or right >= len(self.values) or left > right:
            raise IndexError(f"Отрезок [{left}, {right}] вне таблицы длины {len(self.values)}")
        j = self.log[right - left + 1]
        return min(self.table[j][left], self.table[j][right - (1 << j) + 1])
