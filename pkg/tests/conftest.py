import pytest

from core.point_set import PointSet


@pytest.fixture
def diagonal():
    return PointSet(2, 2, ((0, 0), (1, 1)))


@pytest.fixture
def anti_diagonal():
    return PointSet(2, 2, ((0, 1), (1, 0)))


@pytest.fixture
def staircase():
    return PointSet(2, 3, ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)))
