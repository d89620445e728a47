from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from core.errors import DimensionMismatchError, DomainError


class Monomial(tuple):
    """Exponent vector w of the monomial x^w = x_1^w_1 * ... * x_n^w_n.

    A square-free monomial doubles as a subset of the variable indices.
    Indices are 0-based in code; `render` uses the 1-based x1, x2, ... names.
    """

    def __new__(cls, exponents: Iterable[int] = ()):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise DomainError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int, power: int = 1) -> Monomial:
        if not 0 <= i < n:
            raise DimensionMismatchError(f"variable index {i} outside 0..{n - 1}")
        return cls(power if j == i else 0 for j in range(n))

    @classmethod
    def from_subset(cls, subset: Iterable[int], n: int) -> Monomial:
        members = set(subset)
        if any(not 0 <= i < n for i in members):
            raise DimensionMismatchError(f"subset {sorted(members)} not inside a ground set of size {n}")
        return cls(1 if i in members else 0 for i in range(n))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(self)

    def degree(self) -> int:
        return sum(self)

    def is_one(self) -> bool:
        return not any(self)

    def is_square_free(self) -> bool:
        return all(e <= 1 for e in self)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self) if e)

    def divides(self, other: Monomial) -> bool:
        _check_same_dimension(self, other)
        return all(a <= b for a, b in zip(self, other))

    def times(self, other: Monomial) -> Monomial:
        _check_same_dimension(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def quotient(self, divisor: Monomial) -> Monomial:
        if not divisor.divides(self):
            raise DomainError(f"{divisor.render()} does not divide {self.render()}")
        return Monomial(a - b for a, b in zip(self, divisor))

    def immediate_divisors(self) -> Iterator[Monomial]:
        for i, e in enumerate(self):
            if e:
                yield Monomial(self[j] - (j == i) for j in range(len(self)))

    def render(self) -> str:
        factors = []
        for i, e in enumerate(self):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        return "*".join(factors) if factors else "1"

    def __repr__(self) -> str:
        return f"Monomial({self.render()})"


def divides(a: Monomial, b: Monomial) -> bool:
    return Monomial(a).divides(Monomial(b))


def _check_same_dimension(a: tuple, b: tuple):
    if len(a) != len(b):
        raise DimensionMismatchError(f"monomials of dimension {len(a)} and {len(b)}")


@dataclass(frozen=True)
class MonomialSet:
    n: int
    elements: frozenset[Monomial] = field(default_factory=frozenset)

    def __post_init__(self):
        elements = frozenset(Monomial(m) for m in self.elements)
        for m in elements:
            if len(m) != self.n:
                raise DimensionMismatchError(f"monomial {m.render()} does not live in {self.n} variables")
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.elements)

    def __contains__(self, m) -> bool:
        return Monomial(m) in self.elements

    def is_down_set(self) -> bool:
        return all(d in self.elements for m in self.elements for d in m.immediate_divisors())

    def max_exponent(self) -> int:
        return max((e for m in self.elements for e in m), default=0)

    def as_subsets(self) -> frozenset[frozenset[int]]:
        return frozenset(m.support() for m in self.elements)

    def sorted(self, order=None) -> list[Monomial]:
        """Ascending under a LexOrder, or by (degree, exponents) without one."""
        if order is None:
            return sorted(self.elements, key=lambda m: (m.degree(), tuple(m)))
        return sorted(self.elements, key=order.key)

    def render(self, order=None) -> list[str]:
        return [m.render() for m in self.sorted(order)]
