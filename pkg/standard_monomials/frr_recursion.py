import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Sequence

from core.errors import DimensionMismatchError
from core.lex_order import LexOrder
from core.monomials import Monomial, MonomialSet
from core.point_set import Point, PointSet
from data_models.data_models import SmResult

logger = logging.getLogger(__name__)


@dataclass
class OperationCounter:
    """Instruction-count proxy for the sectioning recursion."""
    ticks: int = 0

    def tick(self, amount: int = 1):
        self.ticks += amount


def sm_lex(V: PointSet, order: LexOrder, counter: OperationCounter | None = None) -> SmResult:
    """Lex standard monomials of I(V) by sectioning on the least significant variable.

    A monomial whose exponent on the least significant variable is w is standard
    iff its truncation is standard for at least w + 1 of the sections.
    Sections are keyed on the coordinate values actually present.
    """
    if order.n != V.n:
        raise DimensionMismatchError(f"order on {order.n} variables for a point set in dimension {V.n}")

    exponents = _standard_exponents(V.points, order.priority, V.n, counter)
    logger.debug("sm_lex order=%s |V|=%d", order, len(V))
    return SmResult(order=order, monomials=MonomialSet(V.n, frozenset(Monomial(e) for e in exponents)))


def _standard_exponents(points: Sequence[Point], priority: tuple[int, ...], n: int, counter: OperationCounter | None) -> list[tuple[int, ...]]:
    if not priority:
        # every variable is fixed, so all points coincide
        return [(0,) * n] if points else []

    last = priority[-1]
    sections = defaultdict(list)
    for p in points:
        sections[p[last]].append(p)
    if counter is not None:
        counter.tick(len(points))

    multiplicity = Counter()
    for section in sections.values():
        truncated = _standard_exponents(section, priority[:-1], n, counter)
        multiplicity.update(truncated)
        if counter is not None:
            counter.tick(len(truncated))

    result = []
    for e, count in multiplicity.items():
        for w in range(count):
            result.append(e[:last] + (w,) + e[last + 1:])
    if counter is not None:
        counter.tick(len(result))
    return result
