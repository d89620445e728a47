import pytest
from hypothesis import given, settings, strategies as st

from core.errors import DimensionMismatchError, DomainError
from core.lex_order import LexOrder
from core.point_set import PointSet
from standard_monomials.frr_recursion import sm_lex
from standard_monomials.relabeling import relabel
from tests.strategies import injective_maps, point_sets


def test_identity_maps(diagonal):
    assert relabel(diagonal, [{}, {}]) == diagonal


def test_spread_values_keep_standard_monomials():
    V = PointSet(1, 3, ((0,), (1,), (2,)))
    W = relabel(V, [{1: 5, 2: 7}])
    assert W.points == ((0,), (5,), (7,))
    assert sm_lex(W, LexOrder.identity(1)).render() == ["1", "x1", "x1^2"]


def test_swap_on_first_coordinate(diagonal):
    W = relabel(diagonal, [{0: 1, 1: 0}, {}])
    assert set(W) == {(1, 0), (0, 1)}
    for order in LexOrder.all_orders(2):
        assert sm_lex(W, order).monomials == sm_lex(diagonal, order).monomials


def test_callable_map():
    W = relabel(PointSet(1, 2, ((0,), (1,))), [lambda v: 3 * v + 1])
    assert W.points == ((1,), (4,))


def test_invalid_maps(diagonal):
    with pytest.raises(DomainError):
        relabel(diagonal, [{0: 1}, {}])
    with pytest.raises(DomainError):
        relabel(diagonal, [{0: -1}, {}])
    with pytest.raises(DimensionMismatchError):
        relabel(diagonal, [{}])


@pytest.mark.property_based
@settings(max_examples=60, deadline=None)
@given(point_sets(max_n=3, max_k=3, max_size=15))
def test_universality_under_injective_relabeling(V):
    W = relabel(V, [lambda v, a=axis: 2 * v + a for axis in range(V.n)])
    for order in LexOrder.all_orders(V.n):
        assert sm_lex(W, order).monomials == sm_lex(V, order).monomials


@pytest.mark.property_based
@settings(max_examples=100, deadline=None)
@given(point_sets(max_n=4, max_k=4, max_size=40), st.data())
def test_universality_under_drawn_relabelings(V, data):
    W = relabel(V, [data.draw(injective_maps(V.k)) for _ in range(V.n)])
    for order in LexOrder.all_orders(V.n):
        assert sm_lex(W, order).monomials == sm_lex(V, order).monomials


@pytest.mark.slow
@pytest.mark.property_based
@settings(max_examples=30, deadline=None)
@given(point_sets(max_n=4, max_k=4, max_size=40), st.randoms(use_true_random=False))
def test_hundred_relabelings_per_point_set(V, rng):
    expected = {order: sm_lex(V, order).monomials for order in LexOrder.all_orders(V.n)}
    for _ in range(100):
        maps = [dict(enumerate(rng.sample(range(3 * V.k + 5), V.k))) for _ in range(V.n)]
        W = relabel(V, maps)
        for order, sm in expected.items():
            assert sm_lex(W, order).monomials == sm
