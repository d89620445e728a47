import logging
from itertools import product

from config import census_cell_guard, config
from core.errors import ContractViolationError, DomainError, GuardExceededError
from core.point_set import PointSet
from data_models.data_models import CensusRow, CensusSummary
from extremality.deciders.bruteforce_decider import BruteForceExtremalityDecider
from extremality.deciders.fast_decider import FastExtremalityDecider

logger = logging.getLogger(__name__)

PREDICATES = ("extremal", "all")


def census(n: int, k: int, predicate: str = "extremal", guard: int | None = None, cross_check: bool | None = None) -> CensusSummary:
    """Classify every subset of the grid {0, ..., k-1}^n."""
    if predicate not in PREDICATES:
        raise DomainError(f"predicate must be one of {PREDICATES}, got '{predicate}'")
    cells = k ** n
    limit = guard if guard is not None else census_cell_guard()
    if cells > limit:
        raise GuardExceededError("census cells", limit, cells)
    if cross_check is None:
        cross_check = config.getboolean("census", "cross_check")
    example_limit = config.getint("census", "example_limit")

    grid = list(product(range(k), repeat=n))
    rows = [CensusRow(size=size) for size in range(cells + 1)]
    summary = CensusSummary(n=n, k=k, predicate=predicate, rows=rows)
    fast = FastExtremalityDecider()
    brute = BruteForceExtremalityDecider()

    for mask in range(1 << cells):
        V = PointSet(n, k, tuple(grid[j] for j in range(cells) if mask >> j & 1))
        extremal = fast.decide(V).extremal
        if cross_check and brute.decide(V).extremal != extremal:
            raise ContractViolationError(f"fast and brute force deciders disagree on {V.points}")

        row = rows[len(V)]
        row.total += 1
        summary.total += 1
        if extremal:
            row.extremal += 1
            summary.extremal += 1
        elif len(summary.non_extremal_examples) < example_limit:
            summary.non_extremal_examples.append(V)

    summary.selected = summary.total if predicate == "all" else summary.extremal
    logger.info("census n=%d k=%d: %d of %d subsets extremal", n, k, summary.extremal, summary.total)
    return summary
