from abc import ABC, abstractmethod

from core.point_set import PointSet
from data_models.data_models import CheckOutcome
from groebner.groebner_basis import GroebnerBasis


class BaseBasisCheck(ABC):

    name: str = ""

    @abstractmethod
    def invoke(self, basis: GroebnerBasis, V: PointSet) -> CheckOutcome:
        pass
