import logging
from itertools import combinations, product
from typing import Iterable

from config import shatter_dimension_guard
from core.errors import DimensionMismatchError, GuardExceededError
from core.point_set import PointSet
from data_models.data_models import ShatterReport
from shattering.set_system import SetSystem
from standard_monomials.all_orders import sm_all_lex

logger = logging.getLogger(__name__)


def shatters(V: PointSet, S: Iterable[int]) -> bool:
    """True iff every assignment of {0, ..., k-1} on S is the restriction of some point."""
    S = sorted(set(S))
    if any(not 0 <= i < V.n for i in S):
        raise DimensionMismatchError(f"{[i + 1 for i in S]} is not a subset of [{V.n}]")
    restrictions = {tuple(p[i] for i in S) for p in V}
    return all(assignment in restrictions for assignment in product(range(V.k), repeat=len(S)))


def shattered_family(V: PointSet, guard: int | None = None) -> ShatterReport:
    limit = guard if guard is not None else shatter_dimension_guard()
    if V.n > limit:
        raise GuardExceededError("shatter dimension", limit, V.n)

    shattered = set()
    for size in range(V.n + 1):
        found = False
        for S in combinations(range(V.n), size):
            S = frozenset(S)
            # sets with an unshattered subset cannot be shattered
            if all(S - {i} in shattered for i in S) and shatters(V, S):
                shattered.add(S)
                found = True
        if not found:
            break

    vc_dim = max((len(S) for S in shattered), default=-1)
    gap = len(shattered) - len(V)
    return ShatterReport(
        shattered=frozenset(shattered),
        vc_dim=vc_dim,
        extremal_gap=gap,
        s_extremal=(gap == 0) if V.k == 2 else None,
    )


def is_s_extremal(F: SetSystem) -> bool:
    return shattered_family(F.to_point_set()).extremal_gap == 0


def sh_equals_sm_union(F: SetSystem, guard: int | None = None) -> bool:
    """Diagnostic: Sh(F) recomputed as the union of lex standard monomials over all orders."""
    V = F.to_point_set()
    union = set()
    for result in sm_all_lex(V, guard).values():
        union |= result.monomials.as_subsets()
    agree = union == shattered_family(V).shattered
    if not agree:
        logger.error("shattered family and standard monomial union disagree for %s", F.sorted_sets())
    return agree
