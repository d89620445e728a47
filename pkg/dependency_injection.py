import importlib
import logging
import os

import yaml

from config import config, here
from core.errors import DomainError
from extremality.base_extremality_decider import BaseExtremalityDecider
from groebner.basis_checks.base_basis_check import BaseBasisCheck
from groebner.certification_pipeline import CertificationPipeline

logger = logging.getLogger(__name__)

DEFAULT_DECIDERS = {
    "fast": "extremality.deciders.fast_decider.FastExtremalityDecider",
    "brute": "extremality.deciders.bruteforce_decider.BruteForceExtremalityDecider",
    "downshift": "extremality.deciders.downshift_decider.DownshiftExtremalityDecider",
}

DEFAULT_BASIS_CHECKS = [
    "groebner.basis_checks.vanishing_check.VanishingCheck",
    "groebner.basis_checks.degree_domination_check.DegreeDominationCheck",
    "groebner.basis_checks.leading_term_certificate_check.LeadingTermCertificateCheck",
    "groebner.basis_checks.zero_set_check.ZeroSetCheck",
]


def dynamic_import(class_path: str):
    """Dynamically import a class or variable from a module string path."""
    module_name, class_name = class_path.rsplit(".", 1)
    module = importlib.import_module(module_name)
    return getattr(module, class_name)


def load_dependencies(path: str | None = None) -> dict:
    path = path or os.path.join(here, config.get("dependencies", "file"))
    if not os.path.exists(path):
        return {}
    with open(path, "r") as file:
        dependencies = yaml.safe_load(file)
    logger.debug("loaded component configuration from %s", path)
    return dependencies or {}


class ExtremalityDeciderFactory():

    def __init__(self, dependencies: dict | None = None):
        self.dependencies = load_dependencies() if dependencies is None else dependencies

    def deciders(self) -> dict:
        return {**DEFAULT_DECIDERS, **(self.dependencies.get("ExtremalityDeciders") or {})}

    def create(self, method: str, guard: int | None = None) -> BaseExtremalityDecider:
        deciders = self.deciders()
        if method not in deciders:
            raise DomainError(f"unknown extremality method '{method}', expected one of {sorted(deciders)}")

        DeciderClass = dynamic_import(deciders[method])
        if not issubclass(DeciderClass, BaseExtremalityDecider):
            raise TypeError(f"{DeciderClass.__name__} must be a subclass of BaseExtremalityDecider")
        return DeciderClass(guard=guard)


class CertificationPipelineFactory():

    def __init__(self, dependencies: dict | None = None):
        self.dependencies = load_dependencies() if dependencies is None else dependencies

    def create(self) -> CertificationPipeline:
        check_paths = self.dependencies.get("BasisChecks") or DEFAULT_BASIS_CHECKS

        checks = []
        for path in check_paths:
            CheckClass = dynamic_import(path)
            if not issubclass(CheckClass, BaseBasisCheck):
                raise TypeError(f"{CheckClass.__name__} must be a subclass of BaseBasisCheck")
            checks.append(CheckClass())
        return CertificationPipeline(checks)
