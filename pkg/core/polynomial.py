from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping

from core.errors import DimensionMismatchError, DomainError
from core.lex_order import LexOrder
from core.monomials import Monomial
from core.point_set import Point


class Polynomial:
    """Sparse polynomial in Q[x_1, ..., x_n]: Monomial -> nonzero Fraction."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        accumulated: dict[Monomial, Fraction] = {}
        for monomial, coefficient in items:
            monomial = Monomial(monomial)
            if len(monomial) != n:
                raise DimensionMismatchError(f"monomial {monomial.render()} in a polynomial on {n} variables")
            accumulated[monomial] = accumulated.get(monomial, Fraction(0)) + _as_fraction(coefficient)
        self._terms = {m: c for m, c in accumulated.items() if c != 0}

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> Polynomial:
        return cls(n, {Monomial.one(n): c})

    @classmethod
    def variable(cls, i: int, n: int) -> Polynomial:
        return cls(n, {Monomial.variable(i, n): 1})

    @classmethod
    def from_monomial(cls, m: Monomial, coefficient=1) -> Polynomial:
        return cls(len(m), {m: coefficient})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def support(self) -> frozenset[Monomial]:
        return frozenset(self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(Monomial(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((m.degree() for m in self._terms), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other: Polynomial):
        if other.n != self.n:
            raise DimensionMismatchError(f"polynomials on {self.n} and {other.n} variables")

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial(self.n, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            products = [
                (a.times(b), ca * cb)
                for a, ca in self._terms.items()
                for b, cb in other._terms.items()
            ]
            return Polynomial(self.n, products)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> Polynomial:
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> Polynomial:
        c = _as_fraction(c)
        return Polynomial(self.n, {m: c * v for m, v in self._terms.items()})

    def shift(self, m: Monomial, c=1) -> Polynomial:
        """c * x^m * self."""
        c = _as_fraction(c)
        return Polynomial(self.n, {t.times(m): c * v for t, v in self._terms.items()})

    def evaluate(self, point: Point) -> Fraction:
        if len(point) != self.n:
            raise DimensionMismatchError(f"evaluating a polynomial on {self.n} variables at {tuple(point)}")
        total = Fraction(0)
        for monomial, coefficient in self._terms.items():
            value = 1
            for coordinate, e in zip(point, monomial):
                if e:
                    value *= coordinate ** e
            total += coefficient * value
        return total

    def leading_monomial(self, order: LexOrder) -> Monomial:
        if self.is_zero():
            raise DomainError("the zero polynomial has no leading monomial")
        if order.n != self.n:
            raise DimensionMismatchError(f"order on {order.n} variables for a polynomial on {self.n}")
        return order.max(self._terms)

    def dominating_term(self) -> Monomial | None:
        if self.is_zero():
            raise DomainError("the zero polynomial is not degree dominated")
        top = max(m.degree() for m in self._terms)
        candidates = [m for m in self._terms if m.degree() == top]
        if len(candidates) != 1:
            return None
        w = candidates[0]
        if self._terms[w] != 1:
            return None
        if all(m == w or m.divides(w) for m in self._terms):
            return w
        return None

    def render(self, order: LexOrder | None = None) -> str:
        if self.is_zero():
            return "0"
        order = order or LexOrder.identity(self.n)
        parts = []
        for monomial in sorted(self._terms, key=order.key, reverse=True):
            coefficient = self._terms[monomial]
            magnitude = abs(coefficient)
            if monomial.is_one():
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial.render()
            else:
                body = f"{magnitude}*{monomial.render()}"
            if not parts:
                parts.append(body if coefficient > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise DomainError("floating point coefficients are not accepted; use int or Fraction")
    return Fraction(value)


def evaluate(p: Polynomial, v: Point) -> Fraction:
    return p.evaluate(v)


def leading_monomial(p: Polynomial, order: LexOrder) -> Monomial:
    return p.leading_monomial(order)


def is_degree_dominated(p: Polynomial) -> Monomial | None:
    return p.dominating_term()
