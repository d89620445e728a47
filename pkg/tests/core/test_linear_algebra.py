from fractions import Fraction

import pytest

from core.errors import ContractViolationError, DimensionMismatchError
from core.linear_algebra import EchelonBasis, solve


def test_solve_exact():
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]


def test_solve_needs_row_swap():
    assert solve([[0, 1], [1, 0]], [2, 3]) == [3, 2]


def test_solve_empty_system():
    assert solve([], []) == []


def test_solve_singular():
    with pytest.raises(ContractViolationError):
        solve([[1, 2], [2, 4]], [1, 2])


def test_solve_shape():
    with pytest.raises(DimensionMismatchError):
        solve([[1, 2]], [1])


def test_echelon_basis():
    basis = EchelonBasis(3)
    assert basis.add_if_independent([1, 1, 1])
    assert basis.add_if_independent([0, 0, 1])
    assert not basis.add_if_independent([2, 2, 5])
    assert not basis.add_if_independent([0, 0, 0])
    assert basis.add_if_independent([0, 1, 0])
    assert basis.rank == 3
