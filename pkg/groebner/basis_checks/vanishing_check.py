from core.point_set import PointSet
from data_models.data_models import CheckOutcome
from groebner.basis_checks.base_basis_check import BaseBasisCheck
from groebner.groebner_basis import GroebnerBasis


class VanishingCheck(BaseBasisCheck):

    name = "vanishing"

    def invoke(self, basis: GroebnerBasis, V: PointSet) -> CheckOutcome:
        for g in basis:
            for p in V:
                if g.evaluate(p) != 0:
                    return CheckOutcome(self.name, False, f"{g.render()} does not vanish at {p}")
        return CheckOutcome(self.name, True, f"{len(basis)} generators vanish on {len(V)} points")
