from core.lex_order import LexOrder
from core.point_set import PointSet
from data_models.data_models import ExtremalityVerdict
from extremality.base_extremality_decider import BaseExtremalityDecider
from standard_monomials.all_orders import check_factorial_guard
from standard_monomials.frr_recursion import sm_lex


class BruteForceExtremalityDecider(BaseExtremalityDecider):

    method = "brute"

    def decide(self, V: PointSet) -> ExtremalityVerdict:
        check_factorial_guard(V.n, self.guard)
        per_order = {order: sm_lex(V, order).monomials for order in LexOrder.all_orders(V.n)}
        return self.verdict_from(per_order)


def is_extremal_bruteforce(V: PointSet, guard: int | None = None) -> ExtremalityVerdict:
    return BruteForceExtremalityDecider(guard=guard).decide(V)
