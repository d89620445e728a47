from core.errors import ContractViolationError
from core.point_set import PointSet
from data_models.data_models import ExtremalityVerdict
from extremality.deciders.bruteforce_decider import BruteForceExtremalityDecider
from extremality.deciders.downshift_decider import DownshiftExtremalityDecider
from extremality.deciders.fast_decider import FastExtremalityDecider


def cross_check(V: PointSet, guard: int | None = None) -> dict[str, ExtremalityVerdict]:
    verdicts = {
        decider.method: decider.decide(V)
        for decider in (
            FastExtremalityDecider(),
            BruteForceExtremalityDecider(guard=guard),
            DownshiftExtremalityDecider(guard=guard),
        )
    }
    answers = {method: verdict.extremal for method, verdict in verdicts.items()}
    if len(set(answers.values())) != 1:
        raise ContractViolationError(f"extremality deciders disagree: {answers}")
    return verdicts
