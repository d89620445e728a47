from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from core.errors import DimensionMismatchError, DomainError
from core.lex_order import LexOrder
from core.monomials import Monomial, MonomialSet
from core.point_set import PointSet


@dataclass(frozen=True)
class SectionKey:
    """The i-section of V at the fixed values of the other n-1 coordinates."""
    axis: int
    fixed: tuple[int, ...]


def _check_axis(V: PointSet, axis: int):
    if not 0 <= axis < V.n:
        raise DimensionMismatchError(f"axis {axis} outside 0..{V.n - 1}")


def section(V: PointSet, key: SectionKey) -> frozenset[int]:
    _check_axis(V, key.axis)
    if len(key.fixed) != V.n - 1:
        raise DimensionMismatchError(f"section key fixes {len(key.fixed)} coordinates, expected {V.n - 1}")
    if any(not 0 <= c < V.k for c in key.fixed):
        raise DomainError(f"section key {key.fixed} leaves the grid")
    return frozenset(
        p[key.axis] for p in V
        if p[:key.axis] + p[key.axis + 1:] == tuple(key.fixed)
    )


def downshift_i(V: PointSet, axis: int) -> PointSet:
    """D_i: every nonempty i-section becomes {0, ..., size - 1}."""
    _check_axis(V, axis)
    section_sizes = defaultdict(int)
    for p in V:
        section_sizes[p[:axis] + p[axis + 1:]] += 1

    shifted = [
        rest[:axis] + (value,) + rest[axis:]
        for rest, size in section_sizes.items()
        for value in range(size)
    ]
    return V.with_points(shifted)


def downshift_seq(V: PointSet, seq: Sequence[int]) -> PointSet:
    """D_{i_1, ..., i_l}(V) = D_{i_1}(D_{i_2}(... D_{i_l}(V))): the last index is applied first."""
    for axis in seq:
        _check_axis(V, axis)
    for axis in reversed(seq):
        V = downshift_i(V, axis)
    return V


def sm_via_downshift(V: PointSet, order: LexOrder) -> MonomialSet:
    """Sm(I(V)) = D_{i_n, ..., i_1}(V) for the lex order x_{i_1} > ... > x_{i_n}."""
    if order.n != V.n:
        raise DimensionMismatchError(f"order on {order.n} variables for a point set in dimension {V.n}")
    shifted = downshift_seq(V, tuple(reversed(order.priority)))
    return MonomialSet(V.n, frozenset(Monomial(p) for p in shifted))
