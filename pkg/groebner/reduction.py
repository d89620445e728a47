from core.lex_order import LexOrder
from core.polynomial import Polynomial
from groebner.groebner_basis import GroebnerBasis


def reduce(p: Polynomial, basis: GroebnerBasis, order: LexOrder) -> Polynomial:
    """Normal form of p: cancel the largest reducible term until none is left.

    Among generators whose leading monomial divides the target, the one with
    the largest leading monomial is used; ties go to the earlier generator.
    """
    leads = [(g.leading_monomial(order), g) for g in basis.generators]
    current = p
    while True:
        reducible = [m for m in current.support() if any(lead.divides(m) for lead, _ in leads)]
        if not reducible:
            return current
        target = order.max(reducible)
        lead, g = max(
            ((lead, g) for lead, g in leads if lead.divides(target)),
            key=lambda pair: order.key(pair[0]),
        )
        factor = current.coefficient(target) / g.coefficient(lead)
        current = current - g.shift(target.quotient(lead), factor)


def is_ideal_member(p: Polynomial, basis: GroebnerBasis, order: LexOrder) -> bool:
    return reduce(p, basis, order).is_zero()
