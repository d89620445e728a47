from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

from core.errors import DimensionMismatchError, DomainError

Point = tuple[int, ...]


@dataclass(frozen=True)
class PointSet:
    """A finite point set V inside the grid {0, ..., k-1}^n.

    Points are deduplicated and stored sorted; `duplicates` counts what was dropped.
    """

    n: int
    k: int
    points: tuple[Point, ...] = ()
    duplicates: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"dimension n must be positive, got {self.n}")
        if self.k < 1:
            raise DomainError(f"alphabet size k must be positive, got {self.k}")

        normalized = []
        for point in self.points:
            point = tuple(int(c) for c in point)
            if len(point) != self.n:
                raise DimensionMismatchError(f"point {point} has {len(point)} coordinates, expected {self.n}")
            if any(not 0 <= c < self.k for c in point):
                raise DomainError(f"point {point} leaves the grid {{0,...,{self.k - 1}}}^{self.n}")
            normalized.append(point)

        unique = sorted(set(normalized))
        object.__setattr__(self, "points", tuple(unique))
        object.__setattr__(self, "duplicates", self.duplicates + len(normalized) - len(unique))
        object.__setattr__(self, "_members", frozenset(unique))

    @classmethod
    def full_grid(cls, n: int, k: int) -> PointSet:
        return cls(n, k, tuple(product(range(k), repeat=n)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self._members

    def is_empty(self) -> bool:
        return not self.points

    def with_points(self, points: Iterable[Point]) -> PointSet:
        return PointSet(self.n, self.k, tuple(points))

    def is_down_set(self) -> bool:
        for p in self.points:
            for i, c in enumerate(p):
                if c > 0 and p[:i] + (c - 1,) + p[i + 1:] not in self._members:
                    return False
        return True

    def is_up_set(self) -> bool:
        for p in self.points:
            for i, c in enumerate(p):
                if c < self.k - 1 and p[:i] + (c + 1,) + p[i + 1:] not in self._members:
                    return False
        return True

    def serialize(self) -> str:
        lines = [f"{self.n} {self.k}"]
        lines.extend(" ".join(str(c) for c in p) for p in self.points)
        return "\n".join(lines) + "\n"
