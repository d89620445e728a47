import logging
from itertools import product

from core.errors import ContractViolationError, DimensionMismatchError
from core.lex_order import LexOrder
from core.linear_algebra import EchelonBasis
from core.monomials import Monomial, MonomialSet
from core.point_set import PointSet
from data_models.data_models import SmResult

logger = logging.getLogger(__name__)


def evaluation_vector(m: Monomial, V: PointSet) -> list[int]:
    values = []
    for p in V:
        value = 1
        for c, e in zip(p, m):
            if e:
                value *= c ** e
        values.append(value)
    return values


def sm_oracle(V: PointSet, order: LexOrder) -> SmResult:
    """Standard monomials by greedy basis selection.

    Grid monomials are visited in increasing order; a monomial is kept iff its
    evaluation vector on V is independent of the vectors kept so far.
    Exponents >= k never need visiting: prod_{j<k} (x_i - j) vanishes on V.
    """
    if order.n != V.n:
        raise DimensionMismatchError(f"order on {order.n} variables for a point set in dimension {V.n}")

    accepted = []
    if not V.is_empty():
        basis = EchelonBasis(len(V))
        for exponents in sorted(product(range(V.k), repeat=V.n), key=order.key):
            m = Monomial(exponents)
            if basis.add_if_independent(evaluation_vector(m, V)):
                accepted.append(m)
                if len(accepted) == len(V):
                    break

    if len(accepted) != len(V):
        raise ContractViolationError(f"oracle found {len(accepted)} independent monomials for {len(V)} points")
    logger.debug("sm_oracle order=%s |V|=%d", order, len(V))
    return SmResult(order=order, monomials=MonomialSet(V.n, frozenset(accepted)))
