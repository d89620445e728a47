from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import permutations
from typing import Iterator

from core.errors import DimensionMismatchError, DomainError
from core.monomials import Monomial


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class LexOrder:
    """Lex order with x_{priority[0]} > x_{priority[1]} > ... (0-based variable indices)."""

    priority: tuple[int, ...]

    def __post_init__(self):
        priority = tuple(int(i) for i in self.priority)
        if sorted(priority) != list(range(len(priority))):
            raise DomainError(f"{priority} is not a permutation of 0..{len(priority) - 1}")
        object.__setattr__(self, "priority", priority)

    @property
    def n(self) -> int:
        return len(self.priority)

    @classmethod
    def identity(cls, n: int) -> LexOrder:
        return cls(tuple(range(n)))

    @classmethod
    def eliminating(cls, i: int, n: int) -> LexOrder:
        """x_i first, the remaining variables in increasing index order."""
        if not 0 <= i < n:
            raise DimensionMismatchError(f"variable index {i} outside 0..{n - 1}")
        return cls((i,) + tuple(j for j in range(n) if j != i))

    @classmethod
    def all_orders(cls, n: int) -> Iterator[LexOrder]:
        for priority in permutations(range(n)):
            yield cls(priority)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> LexOrder:
        """Parse the 1-based "i1,i2,...,in" notation, most significant variable first."""
        try:
            priority = tuple(int(part) - 1 for part in text.replace(" ", "").split(","))
        except ValueError:
            raise DomainError(f"order '{text}' is not a comma separated list of integers")
        if n is not None and len(priority) != n:
            raise DimensionMismatchError(f"order '{text}' has {len(priority)} entries, expected {n}")
        return cls(priority)

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.priority]

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.one_based())

    def key(self, m: Monomial) -> tuple[int, ...]:
        return tuple(m[i] for i in self.priority)

    def compare(self, a: Monomial, b: Monomial) -> Ordering:
        if len(a) != self.n or len(b) != self.n:
            raise DimensionMismatchError(f"comparing monomials of dimension {len(a)}, {len(b)} under an order on {self.n} variables")
        for i in self.priority:
            if a[i] != b[i]:
                return Ordering.LESS if a[i] < b[i] else Ordering.GREATER
        return Ordering.EQUAL

    def max(self, monomials) -> Monomial:
        return max(monomials, key=self.key)


def compare(a: Monomial, b: Monomial, order: LexOrder) -> Ordering:
    return order.compare(a, b)
