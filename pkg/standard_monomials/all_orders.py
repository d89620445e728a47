import logging

from config import factorial_guard
from core.errors import GuardExceededError
from core.lex_order import LexOrder
from core.point_set import PointSet
from data_models.data_models import SmResult
from standard_monomials.frr_recursion import sm_lex

logger = logging.getLogger(__name__)


def check_factorial_guard(n: int, guard: int | None = None):
    limit = guard if guard is not None else factorial_guard()
    if n > limit:
        raise GuardExceededError("factorial", limit, n)


def sm_all_lex(V: PointSet, guard: int | None = None) -> dict[LexOrder, SmResult]:
    check_factorial_guard(V.n, guard)
    results = {order: sm_lex(V, order) for order in LexOrder.all_orders(V.n)}
    logger.debug("computed %d lex orders, %d distinct standard sets", len(results), len({r.monomials for r in results.values()}))
    return results
