import logging

from core.errors import PreconditionError
from core.lex_order import LexOrder
from core.point_set import PointSet
from extremality.deciders.fast_decider import is_extremal_fast
from groebner.certification_pipeline import CertificationPipeline
from groebner.groebner_basis import GroebnerBasis, sort_generators
from groebner.standard_representation import minimal_nonstandard, standard_representation
from standard_monomials.frr_recursion import sm_lex

logger = logging.getLogger(__name__)


def universal_basis(V: PointSet, force: bool = False, order: LexOrder | None = None, pipeline: CertificationPipeline | None = None) -> GroebnerBasis:
    """Degree dominated universal Groebner basis of I(V) for extremal V.

    One generator per minimal nonstandard monomial u: its standard
    representation x^u + sum alpha_v x^v. With `force`, a non-extremal V gets
    the same construction for a single lex order and order_free=False.
    """
    verdict = is_extremal_fast(V)
    if verdict.extremal:
        sm = verdict.sm
        basis_order = None
    elif force:
        basis_order = order or LexOrder.identity(V.n)
        sm = sm_lex(V, basis_order).monomials
        logger.warning("point set is not extremal; building a Groebner basis for the order %s only", basis_order)
    else:
        first, second = verdict.witness
        raise PreconditionError(
            f"point set is not extremal: orders {first} and {second} have different standard monomials",
            witness=verdict.witness,
        )

    generators = [standard_representation(u, V, sm) for u in minimal_nonstandard(sm, V.n, V.k)]
    reference = basis_order or LexOrder.identity(V.n)
    basis = GroebnerBasis(
        n=V.n,
        generators=sort_generators(generators, reference),
        order_free=basis_order is None,
        order=basis_order,
    )
    logger.info("built %d generators for %d points", len(basis), len(V))
    pipeline = pipeline or CertificationPipeline.default()
    return pipeline.invoke(basis, V)
