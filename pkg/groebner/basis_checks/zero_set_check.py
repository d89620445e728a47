from itertools import product

from config import zero_set_cell_guard
from core.point_set import PointSet
from data_models.data_models import CheckOutcome
from groebner.basis_checks.base_basis_check import BaseBasisCheck
from groebner.groebner_basis import GroebnerBasis


class ZeroSetCheck(BaseBasisCheck):
    """Every grid point outside V is cut out by some generator.

    Grids larger than the zero_set_cells guard are not scanned; there the
    vanishing and leading term checks already pin the ideal down to I(V).
    """

    name = "zero_set"

    def invoke(self, basis: GroebnerBasis, V: PointSet) -> CheckOutcome:
        cells = V.k ** V.n
        if cells > zero_set_cell_guard():
            return CheckOutcome(self.name, True, f"skipped: grid has {cells} cells, guard is {zero_set_cell_guard()}")
        for w in product(range(V.k), repeat=V.n):
            if w in V:
                continue
            if all(g.evaluate(w) == 0 for g in basis):
                return CheckOutcome(self.name, False, f"every generator vanishes at {w}, which is not in V")
        return CheckOutcome(self.name, True, "common zeros on the grid are exactly V")
