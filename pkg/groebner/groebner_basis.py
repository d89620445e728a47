from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from core.lex_order import LexOrder
from core.monomials import Monomial
from core.polynomial import Polynomial
from data_models.data_models import CheckOutcome


@dataclass(frozen=True)
class GroebnerBasis:
    """Generators of I(V).

    order_free: every generator is degree dominated and the set is a Groebner
    basis for every term order. Otherwise it is one for `order` only.
    """

    n: int
    generators: tuple[Polynomial, ...]
    order_free: bool
    order: LexOrder | None = None
    fsh_shapes: Mapping[Monomial, frozenset] = field(default_factory=dict)
    checks: tuple[CheckOutcome, ...] = ()

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def reference_order(self) -> LexOrder:
        return self.order or LexOrder.identity(self.n)

    def leading_terms(self, order: LexOrder) -> list[Monomial]:
        return [g.leading_monomial(order) for g in self.generators]

    def dominating_terms(self) -> list[Monomial | None]:
        return [g.dominating_term() for g in self.generators]

    def render(self) -> list[str]:
        return [g.render(LexOrder.identity(self.n)) for g in self.generators]

    def to_json(self) -> dict:
        return {
            "order_free": self.order_free,
            "order": self.order.one_based() if self.order else None,
            "generators": [
                {
                    "polynomial": g.render(LexOrder.identity(self.n)),
                    "terms": [
                        {"exponents": list(m), "coefficient": str(c)}
                        for m, c in sorted(g.terms.items(), key=lambda t: LexOrder.identity(self.n).key(t[0]), reverse=True)
                    ],
                }
                for g in self.generators
            ],
            "fsh_shapes": {
                m.render(): sorted(i + 1 for i in h) for m, h in self.fsh_shapes.items()
            },
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def sort_generators(generators, order: LexOrder) -> tuple[Polynomial, ...]:
    return tuple(sorted(generators, key=lambda g: order.key(g.leading_monomial(order))))
