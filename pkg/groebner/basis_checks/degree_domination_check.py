from core.point_set import PointSet
from data_models.data_models import CheckOutcome
from groebner.basis_checks.base_basis_check import BaseBasisCheck
from groebner.groebner_basis import GroebnerBasis


class DegreeDominationCheck(BaseBasisCheck):

    name = "degree_domination"

    def invoke(self, basis: GroebnerBasis, V: PointSet) -> CheckOutcome:
        if not basis.order_free:
            return CheckOutcome(self.name, True, f"skipped: basis is tied to the order {basis.order}")
        for g in basis:
            if g.dominating_term() is None:
                return CheckOutcome(self.name, False, f"{g.render()} is not degree dominated")
        return CheckOutcome(self.name, True, "every generator is degree dominated")
