import dataclasses
import logging
from typing import List

from core.errors import ContractViolationError
from core.point_set import PointSet
from groebner.basis_checks.base_basis_check import BaseBasisCheck
from groebner.basis_checks.degree_domination_check import DegreeDominationCheck
from groebner.basis_checks.leading_term_certificate_check import LeadingTermCertificateCheck
from groebner.basis_checks.vanishing_check import VanishingCheck
from groebner.basis_checks.zero_set_check import ZeroSetCheck
from groebner.groebner_basis import GroebnerBasis

logger = logging.getLogger(__name__)


class CertificationPipeline():

    def __init__(self, checks: List[BaseBasisCheck]):
        self.checks = checks

    @classmethod
    def default(cls):
        return cls([VanishingCheck(), DegreeDominationCheck(), LeadingTermCertificateCheck(), ZeroSetCheck()])

    def invoke(self, basis: GroebnerBasis, V: PointSet) -> GroebnerBasis:
        outcomes = []
        for check in self.checks:
            outcome = check.invoke(basis, V)
            logger.debug("check %s: %s (%s)", outcome.name, outcome.passed, outcome.detail)
            if not outcome.passed:
                raise ContractViolationError(f"basis certification failed at {outcome.name}: {outcome.detail}")
            outcomes.append(outcome)
        return dataclasses.replace(basis, checks=tuple(outcomes))
