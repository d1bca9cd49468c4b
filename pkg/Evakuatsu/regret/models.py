from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from ..core.models import Point, Scenario
from ..utils.constants import Families
from ..utils.rational import format_rational, rational_fields

# Семейства слагаемых (теги в отчётах)
G_J = Families.G_J
G_IJ = Families.G_IJ
BAR_G_IJ = Families.BAR_G_IJ
H_I = Families.H_I
H_IJ = Families.H_IJ
BAR_H_IJ = Families.BAR_H_IJ


@dataclass(frozen=True)
class RegretWitness:
    """
    Слагаемое, на котором достигается максимум сожаления

    alpha, beta - веса вершин i и j в худшем сценарии, u - ребро внутренней минимизации.
    attained = False, если значение - предел (скачок веса в ноль), а не максимум.
    """
    family: str
    i: int
    j: int
    u: int
    alpha: Fraction
    beta: Fraction
    scenario: Scenario
    attained: bool = True

    def to_dict(self, digits: int = 12) -> Dict[str, Any]:
        data = {
            "family": self.family,
            "i": self.i,
            "j": self.j,
            "u": self.u,
            "attained": self.attained,
            "scenario": [format_rational(w) for w in self.scenario.weights],
        }
        data.update(rational_fields({"alpha": self.alpha, "beta": self.beta}, digits))
        return data


@dataclass(frozen=True)
class Term:
    """Значение одного слагаемого G/H и его свидетель"""
    value: Fraction
    witness: Optional[RegretWitness] = None

    def beats(self, other: Optional["Term"]) -> bool:
        """Строго больше (при равенстве остаётся прежний)"""
        if other is None:
            return True
        if self.value != other.value:
            return self.value > other.value
        return self.witness is not None and self.witness.attained and (
            other.witness is None or not other.witness.attained
        )


@dataclass(frozen=True)
class RegretReport:
    """R_max(P, x) или R_OPT(P) с местом и свидетелем"""
    value: Fraction
    location: Point
    witness: Optional[RegretWitness] = None

    def to_dict(self, digits: int = 12) -> Dict[str, Any]:
        data = rational_fields({"value": self.value, "location": self.location.value}, digits)
        data["vertex_index"] = self.location.vertex_index
        data["witness"] = self.witness.to_dict(digits) if self.witness is not None else None
        return data
