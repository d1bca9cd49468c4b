from typing import Callable, Dict, Hashable, Optional, Sequence, Tuple

from ..core.models import PathInstance, Scenario
from ..pwl import PwlFunction
from ..utils.rational import as_fraction
from ..utils.run_stats import RunStats
from .edges import m_edge, m_edge_single, m_k
from .envelopes import LEFT, left_envelope, right_envelope
from .models import Box, Profile


class ProfileManager:
    """
    Построение профилей одного пути с кэшем по аргументам

    Огибающие LUE/RUE и профили M_k общие для всех рёбер пары (i, j),
    поэтому M^{(k)}_{i,j} строит заново только часть внутри ребра.
    """

    def __init__(self, instance: PathInstance, cache: bool = True):
        self.instance = instance
        self.cache = cache
        self._profiles: Dict[Tuple[Hashable, ...], Profile] = {}
        self._envelopes: Dict[Tuple[Hashable, ...], PwlFunction] = {}

    def _get(self, store: Dict, key: Tuple[Hashable, ...], build: Callable):
        kind = key[0]
        if self.cache and key in store:
            RunStats.record(kind, cached=True)
            return store[key]
        value = build()
        RunStats.record(kind)
        if self.cache:
            store[key] = value
        return value

    def envelope(self, side: str, varying: int, k: int, base: Scenario, domain: Sequence) -> PwlFunction:
        """LUE_{varying,k} (side = left) или RUE_{varying,k} на области alpha"""
        lo, hi = as_fraction(domain[0]), as_fraction(domain[1])
        kind = "lue" if side == LEFT else "rue"
        build = left_envelope if side == LEFT else right_envelope
        return self._get(
            self._envelopes, (kind, varying, k, base, lo, hi),
            lambda: build(self.instance, self.instance.positions[k], varying, base, (lo, hi))
        )

    def vertex(self, i: int, j: int, k: int, box: Box, base: Optional[Scenario] = None) -> Profile:
        """M_k для пары (i, j)"""
        return self._get(
            self._profiles, ("mk", i, j, k, box, base),
            lambda: m_k(self.instance, i, j, k, box, base, self)
        )

    def edge(self, i: int, j: int, k: int, box: Box, base: Optional[Scenario] = None) -> Profile:
        """M^{(k)}_{i,j}"""
        return self._get(
            self._profiles, ("medge", i, j, k, box, base),
            lambda: m_edge(self.instance, i, j, k, box, base, self)
        )

    def edge_single(self, j: int, k: int, base: Scenario, alpha_range: Sequence) -> Profile:
        """M^{(k)}_j"""
        lo, hi = as_fraction(alpha_range[0]), as_fraction(alpha_range[1])
        return self._get(
            self._profiles, ("medge_single", j, k, base, lo, hi),
            lambda: m_edge_single(self.instance, j, k, base, (lo, hi), self)
        )

    def clear(self) -> None:
        self._profiles.clear()
        self._envelopes.clear()

    def __len__(self) -> int:
        return len(self._profiles)
