from typing import Callable, Mapping, Sequence

from core.errors import DimensionMismatchError, DomainError
from core.point_set import PointSet

CoordinateMap = Mapping[int, int] | Callable[[int], int]


def relabel(V: PointSet, maps: Sequence[CoordinateMap]) -> PointSet:
    """Apply one injective value map per coordinate.

    Mappings leave unlisted values fixed. The result lives on the grid
    {0, ..., m} where m is the largest image of {0, ..., k-1}.
    """
    if len(maps) != V.n:
        raise DimensionMismatchError(f"{len(maps)} coordinate maps for a point set in dimension {V.n}")

    tables = []
    for axis, mapping in enumerate(maps):
        table = {value: _image(mapping, value) for value in range(V.k)}
        if len(set(table.values())) != len(table):
            raise DomainError(f"map on coordinate {axis + 1} is not injective on 0..{V.k - 1}")
        if any(image < 0 for image in table.values()):
            raise DomainError(f"map on coordinate {axis + 1} has a negative image")
        tables.append(table)

    k = 1 + max(max(table.values()) for table in tables)
    return PointSet(V.n, k, tuple(tuple(tables[i][c] for i, c in enumerate(p)) for p in V))


def _image(mapping: CoordinateMap, value: int) -> int:
    if isinstance(mapping, Mapping):
        return int(mapping.get(value, value))
    return int(mapping(value))
