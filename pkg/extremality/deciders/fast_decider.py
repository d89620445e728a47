import logging

from core.lex_order import LexOrder
from core.point_set import PointSet
from data_models.data_models import ExtremalityVerdict
from extremality.base_extremality_decider import BaseExtremalityDecider
from standard_monomials.frr_recursion import OperationCounter, sm_lex

logger = logging.getLogger(__name__)


class FastExtremalityDecider(BaseExtremalityDecider):
    """Compares the n lex orders that put one variable first.

    Each of them eliminates its leading variable, and if V is not extremal
    two of them already disagree.
    """

    method = "fast"

    def __init__(self, counter: OperationCounter | None = None, guard: int | None = None):
        super().__init__(guard=guard)
        self.counter = counter

    def decide(self, V: PointSet) -> ExtremalityVerdict:
        per_order = {}
        for i in range(V.n):
            order = LexOrder.eliminating(i, V.n)
            per_order[order] = sm_lex(V, order, counter=self.counter).monomials
        verdict = self.verdict_from(per_order)
        logger.debug("fast decider |V|=%d extremal=%s", len(V), verdict.extremal)
        return verdict


def is_extremal_fast(V: PointSet, counter: OperationCounter | None = None) -> ExtremalityVerdict:
    return FastExtremalityDecider(counter=counter).decide(V)
