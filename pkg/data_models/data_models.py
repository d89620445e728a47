from dataclasses import dataclass, field
from typing import List

from core.lex_order import LexOrder
from core.monomials import MonomialSet
from core.point_set import PointSet


@dataclass(frozen=True)
class SmResult:
    order: LexOrder
    monomials: MonomialSet

    def render(self) -> List[str]:
        return self.monomials.render(self.order)

    def to_json(self) -> dict:
        return {"order": self.order.one_based(), "sm": self.render()}


@dataclass(frozen=True)
class ShatterReport:
    shattered: frozenset
    vc_dim: int
    extremal_gap: int
    s_extremal: bool | None = None

    def sorted_sets(self) -> List[List[int]]:
        return sorted((sorted(i + 1 for i in s) for s in self.shattered), key=lambda s: (len(s), s))

    def to_json(self) -> dict:
        return {
            "shattered": self.sorted_sets(),
            "vc_dim": self.vc_dim,
            "gap": self.extremal_gap,
            "s_extremal": self.s_extremal,
        }


@dataclass(frozen=True)
class ExtremalityVerdict:
    extremal: bool
    method: str
    witness: tuple[LexOrder, LexOrder] | None = None
    sm: MonomialSet | None = None
    per_order_sm: dict | None = None

    def __post_init__(self):
        if (self.witness is None) == (self.sm is None):
            raise ValueError("exactly one of witness and sm must be present")
        if self.extremal != (self.sm is not None):
            raise ValueError("sm is present exactly for extremal verdicts")

    def to_json(self, verbose: bool = False) -> dict:
        payload = {"extremal": self.extremal}
        if self.witness is not None:
            payload["witness_orders"] = [order.one_based() for order in self.witness]
        if self.sm is not None:
            payload["sm"] = self.sm.render()
        if verbose and self.per_order_sm is not None:
            payload["per_order_sm"] = {
                str(order): monomials.render(order) for order, monomials in self.per_order_sm.items()
            }
        return payload


@dataclass
class CensusRow:
    size: int
    total: int = 0
    extremal: int = 0


@dataclass
class CensusSummary:
    n: int
    k: int
    predicate: str
    rows: List[CensusRow] = field(default_factory=list)
    total: int = 0
    extremal: int = 0
    selected: int = 0
    non_extremal_examples: List[PointSet] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "predicate": self.predicate,
            "total": self.total,
            "extremal": self.extremal,
            "selected": self.selected,
            "rows": [{"size": r.size, "total": r.total, "extremal": r.extremal} for r in self.rows],
            "non_extremal_examples": [[list(p) for p in v] for v in self.non_extremal_examples],
        }


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    order: str | None = None
    seq: str | None = None
    method: str = "fast"
    polynomial: str | None = None
    census_n: int | None = None
    census_k: int | None = None
    predicate: str = "extremal"
    json: bool = False
    oracle: bool = False
    all_orders: bool = False
    force: bool = False
    sets: bool = False
    verbose: bool = False
    debug: bool = False
    cross_check: bool = False
    guard: int | None = None
