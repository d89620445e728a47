from typing import Sequence

from core.errors import DimensionMismatchError
from core.lex_order import LexOrder
from shattering.set_system import SetSystem


def downshift_family(F: SetSystem, element: int) -> SetSystem:
    """Remove `element` from every member unless the smaller set is already present."""
    if not 0 <= element < F.n:
        raise DimensionMismatchError(f"element {element} outside 0..{F.n - 1}")
    shifted = set()
    for s in F:
        smaller = s - {element}
        if element in s and smaller in F.sets:
            shifted.add(s)
        else:
            shifted.add(smaller)
    return SetSystem(F.n, frozenset(shifted))


def family_downshift_seq(F: SetSystem, seq: Sequence[int]) -> SetSystem:
    """Right to left composition, as for point sets."""
    for element in reversed(seq):
        F = downshift_family(F, element)
    return F


def sm_family_via_downshift(F: SetSystem, order: LexOrder) -> frozenset:
    """Lex standard monomials of I(F), read as subsets of the ground set."""
    if order.n != F.n:
        raise DimensionMismatchError(f"order on {order.n} variables for a set system on {F.n} elements")
    return family_downshift_seq(F, tuple(reversed(order.priority))).sets
