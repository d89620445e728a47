import pytest

from core.errors import DomainError
from core.point_set import PointSet
from dependency_injection import (
    DEFAULT_BASIS_CHECKS,
    CertificationPipelineFactory,
    ExtremalityDeciderFactory,
    dynamic_import,
    load_dependencies,
)
from extremality.deciders.downshift_decider import DownshiftExtremalityDecider
from groebner.basis_checks.vanishing_check import VanishingCheck


def test_dynamic_import():
    assert dynamic_import("groebner.basis_checks.vanishing_check.VanishingCheck") is VanishingCheck


def test_default_deciders():
    factory = ExtremalityDeciderFactory(dependencies={})
    decider = factory.create("downshift", guard=5)
    assert isinstance(decider, DownshiftExtremalityDecider)
    assert decider.guard == 5
    with pytest.raises(DomainError):
        factory.create("magic")


def test_configured_decider_alias():
    factory = ExtremalityDeciderFactory(dependencies={
        "ExtremalityDeciders": {"exhaustive": "extremality.deciders.bruteforce_decider.BruteForceExtremalityDecider"},
    })
    assert factory.create("exhaustive").decide(PointSet(1, 2)).method == "brute"


def test_rejects_foreign_classes():
    factory = ExtremalityDeciderFactory(dependencies={"ExtremalityDeciders": {"fast": "core.point_set.PointSet"}})
    with pytest.raises(TypeError):
        factory.create("fast")
    with pytest.raises(TypeError):
        CertificationPipelineFactory(dependencies={"BasisChecks": ["core.point_set.PointSet"]}).create()


def test_pipeline_from_configuration():
    pipeline = CertificationPipelineFactory(dependencies={
        "BasisChecks": ["groebner.basis_checks.vanishing_check.VanishingCheck"],
    }).create()
    assert [type(c) for c in pipeline.checks] == [VanishingCheck]
    assert len(CertificationPipelineFactory(dependencies={}).create().checks) == len(DEFAULT_BASIS_CHECKS)


def test_load_dependencies(tmp_path):
    assert load_dependencies(str(tmp_path / "missing.yaml")) == {}
    path = tmp_path / "dependencies.yaml"
    path.write_text("BasisChecks:\n  - groebner.basis_checks.zero_set_check.ZeroSetCheck\n")
    assert load_dependencies(str(path)) == {"BasisChecks": ["groebner.basis_checks.zero_set_check.ZeroSetCheck"]}


def test_example_file_is_loadable():
    import os
    from config import here

    dependencies = load_dependencies(os.path.join(here, "dependencies_example.yaml"))
    factory = ExtremalityDeciderFactory(dependencies=dependencies)
    assert set(factory.deciders()) >= {"fast", "brute", "downshift"}
    assert CertificationPipelineFactory(dependencies=dependencies).create().checks
