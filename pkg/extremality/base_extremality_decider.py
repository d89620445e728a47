from abc import ABC, abstractmethod

from core.lex_order import LexOrder
from core.monomials import MonomialSet
from core.point_set import PointSet
from data_models.data_models import ExtremalityVerdict


class BaseExtremalityDecider(ABC):

    method: str = ""

    def __init__(self, guard: int | None = None):
        self.guard = guard

    @abstractmethod
    def decide(self, V: PointSet) -> ExtremalityVerdict:
        pass

    def verdict_from(self, per_order: dict[LexOrder, MonomialSet]) -> ExtremalityVerdict:
        """Extremal iff all orders agree; otherwise the first differing pair in order."""
        orders = list(per_order)
        reference = orders[0]
        for other in orders[1:]:
            if per_order[other] != per_order[reference]:
                return ExtremalityVerdict(
                    extremal=False,
                    method=self.method,
                    witness=(reference, other),
                    per_order_sm=per_order,
                )
        return ExtremalityVerdict(
            extremal=True,
            method=self.method,
            sm=per_order[reference],
            per_order_sm=per_order,
        )
