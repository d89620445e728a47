"""Independent check: a reduced Groebner basis is unique, so sympy must rebuild ours."""
import pytest
import sympy
from hypothesis import assume, given, settings

from core.point_set import PointSet
from extremality.deciders.fast_decider import is_extremal_fast
from groebner.universal_basis import universal_basis
from tests.strategies import point_sets


def as_sympy(basis, symbols):
    expressions = set()
    for g in basis:
        expr = sympy.Integer(0)
        for exponents, c in g.terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for symbol, e in zip(symbols, exponents):
                term *= symbol ** e
            expr += term
        expressions.add(sympy.expand(expr))
    return expressions


def sympy_basis(generators, symbols, order):
    reduced = sympy.groebner(list(generators), *symbols, order=order)
    return {sympy.expand(sympy.Poly(e, *symbols).monic().as_expr()) for e in reduced.exprs}


@pytest.mark.parametrize("points", [
    ((0, 0), (1, 0), (0, 1)),
    ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)),
    ((1, 1), (1, 2), (2, 1), (2, 2), (0, 2)),
])
def test_known_extremal_sets(points):
    V = PointSet(2, 3, points)
    assert is_extremal_fast(V).extremal
    symbols = sympy.symbols("x1:3")
    ours = as_sympy(universal_basis(V), symbols)
    for order in ("lex", "grlex", "grevlex"):
        assert sympy_basis(ours, symbols, order) == ours


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(point_sets(max_n=3, max_k=3, max_size=12))
def test_sympy_reproduces_universal_basis(V):
    assume(len(V) > 0 and is_extremal_fast(V).extremal)
    symbols = sympy.symbols(f"x1:{V.n + 1}")
    ours = as_sympy(universal_basis(V), symbols)
    assert sympy_basis(ours, symbols, "lex") == ours
    assert sympy_basis(ours, symbols, "grevlex") == ours
