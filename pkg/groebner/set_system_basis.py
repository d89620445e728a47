import logging
from itertools import combinations

from core.errors import DomainError, PreconditionError
from core.lex_order import LexOrder
from core.monomials import Monomial
from core.polynomial import Polynomial
from extremality.deciders.fast_decider import is_extremal_fast
from groebner.certification_pipeline import CertificationPipeline
from groebner.groebner_basis import GroebnerBasis, sort_generators
from groebner.standard_representation import minimal_nonstandard, standard_representation
from shattering.set_system import SetSystem, render_set
from shattering.shattering import is_s_extremal
from standard_monomials.frr_recursion import sm_lex

logger = logging.getLogger(__name__)


def f_SH(S, H, n: int) -> Polynomial:
    """x_H * prod_{i in S \\ H} (x_i - 1); nonzero at v_F iff F & S == H."""
    S, H = frozenset(S), frozenset(H)
    if not H <= S:
        raise DomainError(f"{render_set(H)} is not a subset of {render_set(S)}")
    p = Polynomial.from_monomial(Monomial.from_subset(H, n))
    for i in sorted(S - H):
        p = p * (Polynomial.variable(i, n) - Polynomial.constant(n, 1))
    return p


def match_fsh(g: Polynomial, S, n: int) -> frozenset | None:
    S = frozenset(S)
    for size in range(len(S) + 1):
        for H in combinations(sorted(S), size):
            if f_SH(S, H, n) == g:
                return frozenset(H)
    return None


def field_polynomials(n: int) -> list[Polynomial]:
    return [
        Polynomial(n, {Monomial.variable(i, n, 2): 1, Monomial.variable(i, n): -1})
        for i in range(n)
    ]


def set_system_basis(F: SetSystem, pipeline: CertificationPipeline | None = None) -> GroebnerBasis:
    """Universal Groebner basis of I(F) for an s-extremal family.

    Square-free generators come from standard representations and are matched
    against the f_{S,H} shape; the field polynomials x_i^2 - x_i join them and
    all generators are listed in the same order universal_basis uses.
    """
    V = F.to_point_set()
    if not is_s_extremal(F):
        raise PreconditionError(
            f"set system is not shattering-extremal: {F.sorted_sets()}",
            witness=is_extremal_fast(V).witness,
        )

    order = LexOrder.identity(F.n)
    sm = sm_lex(V, order).monomials
    generators, shapes = [], {}
    for u in minimal_nonstandard(sm, F.n, 2).sorted(order):
        if not u.is_square_free():
            continue
        g = standard_representation(u, V, sm)
        H = match_fsh(g, u.support(), F.n)
        if H is not None:
            shapes[u] = H
        generators.append(g)

    basis = GroebnerBasis(
        n=F.n,
        generators=sort_generators(generators + field_polynomials(F.n), order),
        order_free=True,
        fsh_shapes=shapes,
    )
    logger.info("set system basis: %d square-free generators, %d of f_SH shape", len(generators), len(shapes))
    pipeline = pipeline or CertificationPipeline.default()
    return pipeline.invoke(basis, V)
