from core.lex_order import LexOrder
from core.point_set import PointSet
from data_models.data_models import ExtremalityVerdict
from downshift.point_set_downshift import sm_via_downshift
from extremality.base_extremality_decider import BaseExtremalityDecider
from standard_monomials.all_orders import check_factorial_guard


class DownshiftExtremalityDecider(BaseExtremalityDecider):
    """Extremal iff D_{pi(n), ..., pi(1)}(V) is the same for every permutation pi."""

    method = "downshift"

    def decide(self, V: PointSet) -> ExtremalityVerdict:
        check_factorial_guard(V.n, self.guard)
        per_order = {order: sm_via_downshift(V, order) for order in LexOrder.all_orders(V.n)}
        return self.verdict_from(per_order)


def is_extremal_downshift(V: PointSet, guard: int | None = None) -> ExtremalityVerdict:
    return DownshiftExtremalityDecider(guard=guard).decide(V)
