from config import factorial_guard
from core.lex_order import LexOrder
from core.monomials import Monomial
from core.point_set import PointSet
from data_models.data_models import CheckOutcome
from groebner.basis_checks.base_basis_check import BaseBasisCheck
from groebner.groebner_basis import GroebnerBasis
from standard_monomials.frr_recursion import sm_lex


def uncovered_monomials(leads: list[Monomial], n: int, limit: int) -> set[Monomial]:
    """Monomials no lead divides, grown from 1 one variable at a time.

    They form a down-set, so the walk reaches all of them. It stops as soon as
    more than `limit` are found, which keeps the cost at O(limit * n * |leads|).
    """
    one = Monomial.one(n)
    if any(lead.divides(one) for lead in leads):
        return set()
    found = {one}
    frontier = [one]
    while frontier:
        m = frontier.pop()
        for i in range(n):
            successor = m.times(Monomial.variable(i, n))
            if successor in found or any(lead.divides(successor) for lead in leads):
                continue
            found.add(successor)
            if len(found) > limit:
                return found
            frontier.append(successor)
    return found


class LeadingTermCertificateCheck(BaseBasisCheck):
    """Generators vanishing on V whose leading terms leave exactly Sm(I(V))
    uncovered form a Groebner basis; no S-polynomials needed."""

    name = "leading_term_certificate"

    def invoke(self, basis: GroebnerBasis, V: PointSet) -> CheckOutcome:
        for order in self._orders(basis):
            uncovered = uncovered_monomials(basis.leading_terms(order), V.n, len(V))
            if len(uncovered) > len(V):
                return CheckOutcome(
                    self.name, False,
                    f"order {order}: more than {len(V)} monomials escape the leading terms",
                )
            expected = sm_lex(V, order).monomials.elements
            if uncovered != expected:
                return CheckOutcome(
                    self.name, False,
                    f"order {order}: {len(uncovered)} monomials escape the leading terms, Sm has {len(expected)}",
                )
        return CheckOutcome(self.name, True, "leading terms cut out the standard monomials")

    def _orders(self, basis: GroebnerBasis):
        if not basis.order_free:
            return [basis.reference_order()]
        if basis.n <= factorial_guard():
            return list(LexOrder.all_orders(basis.n))
        return [LexOrder.eliminating(i, basis.n) for i in range(basis.n)]
