import pytest
from hypothesis import assume, given, settings, strategies as st

from core.lex_order import LexOrder
from core.point_set import PointSet
from core.polynomial import Polynomial
from extremality.deciders.fast_decider import is_extremal_fast
from groebner.reduction import is_ideal_member, reduce
from groebner.universal_basis import universal_basis
from standard_monomials.frr_recursion import sm_lex
from tests.strategies import grid_corpus, lex_orders, point_sets, small_grids

DOWN_SET = PointSet(2, 2, ((0, 0), (1, 0), (0, 1)))


@pytest.fixture
def basis():
    return universal_basis(DOWN_SET)


def test_reduce_to_zero(basis):
    x1, x2 = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    order = LexOrder.identity(2)
    assert reduce(x1 * x1 * x2, basis, order).is_zero()
    for g in basis:
        assert reduce(g, basis, order).is_zero()
        assert is_ideal_member(g, basis, order)


def test_normal_form_is_fixed(basis):
    p = Polynomial.variable(0, 2) + Polynomial.constant(2, 3)
    assert reduce(p, basis, LexOrder.parse("2,1")) == p
    assert not is_ideal_member(p, basis, LexOrder.identity(2))


def test_forced_basis_reduces_under_its_order(diagonal):
    order = LexOrder.parse("1,2")
    basis = universal_basis(diagonal, force=True, order=order)
    x1, x2 = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    assert reduce(x1 - x2, basis, order).is_zero()
    assert reduce(x1, basis, order) == x2


coefficients = st.integers(min_value=-3, max_value=3)


@pytest.mark.property_based
@settings(max_examples=100, deadline=None)
@given(point_sets(max_n=3, max_k=3, max_size=15), st.data())
def test_reduction_is_sound(V, data):
    assume(is_extremal_fast(V).extremal)
    basis = universal_basis(V)
    exponents = st.tuples(*[st.integers(min_value=0, max_value=V.k + 1)] * V.n)
    p = Polynomial(V.n, data.draw(st.lists(st.tuples(exponents, coefficients), max_size=6)))
    for order in LexOrder.all_orders(V.n):
        normal_form = reduce(p, basis, order)
        sm = sm_lex(V, order).monomials
        assert all(m in sm for m in normal_form.support())
        assert all((p - normal_form).evaluate(v) == 0 for v in V)


def drawn_polynomial(data, n, max_exponent, max_size=6):
    exponents = st.tuples(*[st.integers(min_value=0, max_value=max_exponent)] * n)
    return Polynomial(n, data.draw(st.lists(st.tuples(exponents, coefficients), max_size=max_size)))


@pytest.mark.property_based
@settings(max_examples=200, deadline=None)
@given(point_sets(max_n=4, max_k=3, max_size=30), st.data())
def test_reduction_is_linear_and_kills_the_ideal(V, data):
    assume(is_extremal_fast(V).extremal)
    basis = universal_basis(V)
    order = data.draw(lex_orders(V.n))
    p, q = drawn_polynomial(data, V.n, V.k + 1), drawn_polynomial(data, V.n, V.k + 1)
    assert reduce(p + q, basis, order) == reduce(p, basis, order) + reduce(q, basis, order)
    assert reduce(p.scale(3), basis, order) == reduce(p, basis, order).scale(3)

    member = Polynomial.zero(V.n)
    for g in basis:
        member = member + drawn_polynomial(data, V.n, 2, max_size=3) * g
    assert reduce(member, basis, order).is_zero()


@pytest.mark.slow
@pytest.mark.parametrize("n, k", small_grids())
def test_every_extremal_small_grid_set_is_certified(n, k):
    orders = {LexOrder.identity(n), LexOrder(tuple(reversed(range(n)))), LexOrder.eliminating(n - 1, n)}
    for V in grid_corpus(n, k, edge=2):
        if not is_extremal_fast(V).extremal:
            continue
        basis = universal_basis(V)
        assert all(check.passed for check in basis.checks), V.points
        for order in orders:
            for g in basis:
                for i in range(n):
                    assert reduce(g * Polynomial.variable(i, n), basis, order).is_zero()
