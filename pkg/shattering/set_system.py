from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from core.errors import DimensionMismatchError, DomainError
from core.point_set import PointSet


@dataclass(frozen=True)
class SetSystem:
    """A family of subsets of the ground set {0, ..., n-1}."""

    n: int
    sets: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"ground set size must be positive, got {self.n}")
        sets = frozenset(frozenset(int(i) for i in s) for s in self.sets)
        for s in sets:
            if any(not 0 <= i < self.n for i in s):
                raise DimensionMismatchError(f"set {render_set(s)} is not a subset of a ground set of size {self.n}")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]]) -> SetSystem:
        return cls(n, frozenset(frozenset(s) for s in sets))

    @classmethod
    def from_point_set(cls, V: PointSet) -> SetSystem:
        if V.k > 2:
            raise DomainError(f"a set system needs 0/1 points, got alphabet size {V.k}")
        return cls(V.n, frozenset(frozenset(i for i, c in enumerate(p) if c) for p in V))

    def to_point_set(self) -> PointSet:
        return PointSet(self.n, 2, tuple(tuple(1 if i in s else 0 for i in range(self.n)) for s in self.sets))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.sets

    def sorted_sets(self) -> list[list[int]]:
        """1-based element lists, by size then lexicographically."""
        return sorted((sorted(i + 1 for i in s) for s in self.sets), key=lambda s: (len(s), s))

    def is_down_set(self) -> bool:
        return all(s - {i} in self.sets for s in self.sets for i in s)


def render_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(s)) + "}"
