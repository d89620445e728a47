import pytest
from hypothesis import given, settings, strategies as st

from core.errors import DimensionMismatchError, DomainError
from core.lex_order import LexOrder, Ordering, compare
from core.monomials import Monomial
from tests.strategies import lex_orders, monomials


def test_compare():
    order = LexOrder.parse("1,2")
    assert compare(Monomial((0, 1)), Monomial((1, 0)), order) == Ordering.LESS
    assert compare(Monomial((1, 1)), Monomial((1, 1)), order) == Ordering.EQUAL
    for o in LexOrder.all_orders(2):
        assert compare(Monomial((0, 0)), Monomial((0, 3)), o) == Ordering.LESS


def test_reversed_priority_flips_comparison():
    assert compare(Monomial((0, 1)), Monomial((1, 0)), LexOrder.parse("2,1")) == Ordering.GREATER


def test_compare_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        LexOrder.identity(2).compare(Monomial((0, 1, 0)), Monomial((1, 0)))


def test_parse_and_render():
    order = LexOrder.parse("3,1,2")
    assert order.priority == (2, 0, 1)
    assert order.one_based() == [3, 1, 2]
    assert str(order) == "3,1,2"


@pytest.mark.parametrize("text", ["1,1", "0,1", "a,b"])
def test_parse_rejects_non_permutations(text):
    with pytest.raises(DomainError):
        LexOrder.parse(text)


def test_parse_checks_length():
    with pytest.raises(DimensionMismatchError):
        LexOrder.parse("1,2", 3)


def test_eliminating_and_all_orders():
    assert LexOrder.eliminating(2, 4).priority == (2, 0, 1, 3)
    orders = list(LexOrder.all_orders(3))
    assert len(orders) == 6
    assert orders[0] == LexOrder.identity(3)


def test_max_and_key():
    order = LexOrder.parse("2,1")
    assert order.max([Monomial((5, 0)), Monomial((0, 1))]) == (0, 1)
    assert order.key(Monomial((3, 4))) == (4, 3)


@st.composite
def monomial_triples(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    return draw(lex_orders(n)), draw(monomials(n)), draw(monomials(n)), draw(monomials(n))


@pytest.mark.property_based
@settings(max_examples=500)
@given(monomial_triples())
def test_lex_order_is_a_term_order(triple):
    order, a, b, c = triple
    assert order.compare(a, b) == -order.compare(b, a)
    assert (order.compare(a, b) == Ordering.EQUAL) == (a == b)
    if order.compare(a, b) <= 0 and order.compare(b, c) <= 0:
        assert order.compare(a, c) <= 0
    # multiplicative
    assert order.compare(a.times(c), b.times(c)) == order.compare(a, b)
    assert order.compare(Monomial.one(len(a)), a) <= 0
