"""
Максимальное сожаление R_max(P, x) и минимакс сожаления R_OPT(P)
"""
import math
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

from ..core.logger import SolverLogger
from ..core.models import PathInstance
from ..core.path_model import Number, _value
from ..profile import ProfileManager
from ..utils.errors import InstanceError
from .families import term_barG_ij, term_barH_ij, term_G_ij, term_G_j, term_H_i, term_H_ij
from .models import RegretReport, Term

ZERO = Fraction(0)


class RegretSolver:
    """
    Вычисление G(x), H(x) и R_max(P, x) = max(G(x), H(x)) с общим кэшем профилей.

    Профили M^{(u)} не зависят от x, поэтому все запросы R_max при поиске R_OPT
    строят их один раз.
    """

    def __init__(self, instance: PathInstance, cache: bool = True):
        self.instance = instance
        self.profiles = ProfileManager(instance, cache)
        self._at_vertex: Dict[Tuple[str, int], Optional[Term]] = {}

    # --- Слагаемые ---
    def left_terms(self, x: Number) -> Iterator[Term]:
        """G_j, затем G_{i,j}, затем barG_{i,j} для всех j с x_j < x"""
        x = _value(x)
        positions = self.instance.positions
        below = [j for j in range(self.instance.vertex_count) if positions[j] < x]
        for j in below:
            yield term_G_j(self.instance, j, x, self.profiles)
        for j in below:
            for i in range(j):
                yield term_G_ij(self.instance, i, j, x, self.profiles)
        for j in below:
            for i in range(j):
                yield term_barG_ij(self.instance, i, j, x, self.profiles)

    def right_terms(self, x: Number) -> Iterator[Term]:
        """H_i, затем H_{i,j}, затем barH_{i,j} для всех i с x < x_i"""
        x = _value(x)
        positions = self.instance.positions
        above = [i for i in range(self.instance.vertex_count) if x < positions[i]]
        for i in above:
            yield term_H_i(self.instance, i, x, self.profiles)
        for i in above:
            for j in range(i + 1, self.instance.vertex_count):
                yield term_H_ij(self.instance, i, j, x, self.profiles)
        for i in above:
            for j in range(i + 1, self.instance.vertex_count):
                yield term_barH_ij(self.instance, i, j, x, self.profiles)

    @staticmethod
    def _best(terms: Iterator[Term]) -> Optional[Term]:
        best: Optional[Term] = None
        for term in terms:
            if term.beats(best):
                best = term
        return best

    def _vertex_term(self, side: str, x: Fraction) -> Optional[Term]:
        vertex = self.instance.point(x).vertex_index
        if vertex is None:
            terms = self.left_terms(x) if side == "G" else self.right_terms(x)
            return self._best(terms)
        key = (side, vertex)
        if key not in self._at_vertex:
            terms = self.left_terms(x) if side == "G" else self.right_terms(x)
            self._at_vertex[key] = self._best(terms)
        return self._at_vertex[key]

    def G(self, x: Number) -> Optional[Term]:
        """Максимум слагаемых G; None, если слева от x нет вершин"""
        return self._vertex_term("G", _value(x))

    def H(self, x: Number) -> Optional[Term]:
        """Максимум слагаемых H; None, если справа от x нет вершин"""
        return self._vertex_term("H", _value(x))

    # --- R_max ---
    def r_max(self, x: Number) -> RegretReport:
        """
        R_max(P, x) = max(G(x), H(x)); отчёт со свидетелем худшего сценария

        Значение - супремум: если свидетель не достигается (attained = False),
        сожаление сколь угодно близко к нему, но не равно.
        """
        x = _value(x)
        point = self.instance.point(x)
        value, witness = ZERO, None
        for term in (self.G(x), self.H(x)):
            if term is not None and term.value > value:
                value, witness = term.value, term.witness
        return RegretReport(value, point, witness)

    def _side_value(self, side: str, x: Fraction) -> Union[Fraction, float]:
        term = self.G(x) if side == "G" else self.H(x)
        return -math.inf if term is None else term.value

    # --- R_OPT ---
    def r_opt(self) -> RegretReport:
        """
        R_OPT(P) = min по x от R_max(P, x)

        Двоичный поиск последней вершины m с G(x_m) < H(x_m), затем проверка рёбер
        m - 1, m, m + 1: значения в вершинах и пересечение
        G(x_{u+1}) - (x_{u+1} - x) с H(x_u) - (x - x_u) внутри ребра.
        При равенстве выбирается самая левая точка.
        """
        positions = self.instance.positions
        n = self.instance.n
        SolverLogger.progress(f"Поиск R_OPT на пути из {self.instance.vertex_count} вершин")
        if n == 0:
            report = self.r_max(positions[0])
            SolverLogger.success(f"R_OPT = {report.value} в x = {positions[0]}")
            return report

        lo, hi = 0, n
        while hi - lo > 1:
            mid = (lo + hi) // 2
            g, h = self._side_value("G", positions[mid]), self._side_value("H", positions[mid])
            SolverLogger.debug(f"Вершина {mid}: G = {g}, H = {h}")
            if g < h:
                lo = mid
            else:
                hi = mid

        candidates: List[Tuple[Fraction, Fraction]] = []
        for u in (lo - 1, lo, lo + 1):
            if 0 <= u < n:
                candidates.extend(self._edge_candidates(u))

        best_x, best_value = candidates[0]
        for x, value in candidates[1:]:
            if value < best_value or (value == best_value and x < best_x):
                best_x, best_value = x, value
        report = self.r_max(best_x)
        SolverLogger.success(f"R_OPT = {report.value} в x = {best_x}")
        return report

    def _edge_candidates(self, u: int) -> List[Tuple[Fraction, Fraction]]:
        """Кандидаты минимума R_max на ребре [x_u, x_{u+1}]"""
        x_u, x_next = self.instance.positions[u], self.instance.positions[u + 1]
        candidates = [(x_u, self.r_max(x_u).value)]
        a = self._side_value("G", x_next)
        b = self._side_value("H", x_u)
        crossing = (b - a + x_next + x_u) / 2
        if x_u < crossing < x_next:
            candidates.append((crossing, max(ZERO, a - (x_next - crossing))))
        candidates.append((x_next, self.r_max(x_next).value))
        return candidates


def r_max(instance: PathInstance, x: Number) -> RegretReport:
    """R_max(P, x) одним вызовом"""
    return RegretSolver(instance).r_max(x)


def r_opt(instance: PathInstance) -> RegretReport:
    """R_OPT(P) одним вызовом"""
    if not instance.positions:
        raise InstanceError("Пустой путь")
    return RegretSolver(instance).r_opt()
