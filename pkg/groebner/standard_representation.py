from core.errors import DimensionMismatchError, DomainError
from core.linear_algebra import solve
from core.monomials import Monomial, MonomialSet
from core.point_set import PointSet
from core.polynomial import Polynomial
from standard_monomials.evaluation_oracle import evaluation_vector


def minimal_nonstandard(sm: MonomialSet, n: int, k: int) -> MonomialSet:
    """Division-minimal monomials outside the down-set sm.

    They generate the leading-term up-set and all have exponents <= k.
    """
    if sm.n != n:
        raise DimensionMismatchError(f"standard set on {sm.n} variables, expected {n}")
    if not sm.is_down_set():
        raise DomainError("standard monomials must form a down-set under divisibility")
    if sm.max_exponent() >= k:
        raise DomainError(f"standard monomials must have exponents below k={k}")

    if len(sm) == 0:
        return MonomialSet(n, frozenset({Monomial.one(n)}))

    candidates = {m.times(Monomial.variable(i, n)) for m in sm for i in range(n)}
    minimal = {
        u for u in candidates
        if u not in sm and all(d in sm for d in u.immediate_divisors())
    }
    return MonomialSet(n, frozenset(minimal))


def standard_representation(u: Monomial, V: PointSet, sm: MonomialSet) -> Polynomial:
    """The unique x^u + sum alpha_v x^v (v in sm) vanishing on V."""
    u = Monomial(u)
    if len(u) != V.n or sm.n != V.n:
        raise DimensionMismatchError(f"monomial, standard set and point set disagree on the dimension {V.n}")
    if u in sm:
        raise DomainError(f"{u.render()} is a standard monomial")
    if len(sm) != len(V):
        raise DomainError(f"{len(sm)} standard monomials for {len(V)} points")

    basis = sm.sorted()
    columns = [evaluation_vector(m, V) for m in basis]
    matrix = [[column[row] for column in columns] for row in range(len(V))]
    rhs = [-value for value in evaluation_vector(u, V)]
    alpha = solve(matrix, rhs)
    return Polynomial(V.n, [(u, 1)] + list(zip(basis, alpha)))
