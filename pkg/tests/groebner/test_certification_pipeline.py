import dataclasses

from core.monomials import Monomial
from core.point_set import PointSet
from core.polynomial import Polynomial
from groebner.basis_checks.degree_domination_check import DegreeDominationCheck
from groebner.basis_checks.leading_term_certificate_check import (
    LeadingTermCertificateCheck,
    uncovered_monomials,
)
from groebner.basis_checks.vanishing_check import VanishingCheck
from groebner.basis_checks.zero_set_check import ZeroSetCheck
from groebner.groebner_basis import GroebnerBasis
from groebner.universal_basis import universal_basis

DOWN_SET = PointSet(2, 2, ((0, 0), (1, 0), (0, 1)))


def x(i):
    return Polynomial.variable(i, 2)


def test_checks_pass_on_a_real_basis():
    basis = universal_basis(DOWN_SET)
    for check in (VanishingCheck(), DegreeDominationCheck(), LeadingTermCertificateCheck(), ZeroSetCheck()):
        assert check.invoke(basis, DOWN_SET).passed


def test_vanishing_check_fails():
    basis = GroebnerBasis(n=2, generators=(x(0),), order_free=True)
    outcome = VanishingCheck().invoke(basis, DOWN_SET)
    assert not outcome.passed
    assert "(1, 0)" in outcome.detail


def test_degree_domination_check():
    basis = GroebnerBasis(n=2, generators=(x(0) + x(1),), order_free=True)
    assert not DegreeDominationCheck().invoke(basis, DOWN_SET).passed
    forced = dataclasses.replace(basis, order_free=False)
    assert DegreeDominationCheck().invoke(forced, DOWN_SET).passed


def test_leading_term_certificate_needs_every_generator():
    basis = universal_basis(DOWN_SET)
    partial = dataclasses.replace(basis, generators=basis.generators[:-1])
    assert not LeadingTermCertificateCheck().invoke(partial, DOWN_SET).passed


def test_zero_set_check():
    basis = GroebnerBasis(n=2, generators=(x(0) * x(0) - x(0),), order_free=True)
    outcome = ZeroSetCheck().invoke(basis, DOWN_SET)
    assert not outcome.passed
    assert "(1, 1)" in outcome.detail


def test_uncovered_monomials_of_a_staircase():
    leads = [Monomial((2, 0)), Monomial((1, 1)), Monomial((0, 2))]
    assert uncovered_monomials(leads, 2, limit=10) == {Monomial((0, 0)), Monomial((1, 0)), Monomial((0, 1))}
    assert uncovered_monomials([Monomial((0, 0))], 2, limit=10) == set()


def test_uncovered_monomials_stop_past_the_limit():
    assert len(uncovered_monomials([Monomial((2, 0))], 2, limit=3)) == 4


def test_certificate_cost_does_not_depend_on_the_grid():
    V = PointSet(2, 1500, ((0, 0),))
    basis = universal_basis(V)
    assert sorted(g.render() for g in basis) == ["x1", "x2"]
    assert LeadingTermCertificateCheck().invoke(basis, V).passed


def test_zero_set_check_skips_large_grids(monkeypatch):
    monkeypatch.setattr("groebner.basis_checks.zero_set_check.zero_set_cell_guard", lambda: 3)
    basis = GroebnerBasis(n=2, generators=(x(0) * x(0) - x(0),), order_free=True)
    outcome = ZeroSetCheck().invoke(basis, DOWN_SET)
    assert outcome.passed
    assert outcome.detail.startswith("skipped")
