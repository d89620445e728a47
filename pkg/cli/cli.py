"""Command-line surface.

Orders are written most significant variable first: "--order 2,1" means x2 > x1.
Downshift sequences follow composition notation and run right to left:
"--seq 2,1" computes D_2(D_1(V)), which is Sm(I(V)) for the order "1,2".
"""
import argparse
import json
import logging
import sys

from config import configure_logging
from core.errors import (
    ConfigurationError,
    ContractViolationError,
    DimensionMismatchError,
    DomainError,
    GuardExceededError,
    InputDataError,
    PreconditionError,
)
from core.lex_order import LexOrder
from data_models.data_models import RunConfig
from dependency_injection import CertificationPipelineFactory, ExtremalityDeciderFactory
from downshift.point_set_downshift import downshift_seq
from extremality.census import PREDICATES, census
from extremality.cross_check import cross_check
from groebner.reduction import reduce
from groebner.set_system_basis import set_system_basis
from groebner.universal_basis import universal_basis
from shattering.set_system import render_set
from shattering.shattering import shattered_family
from standard_monomials.all_orders import sm_all_lex
from standard_monomials.evaluation_oracle import sm_oracle
from standard_monomials.frr_recursion import sm_lex
from cli.parsing import parse_pointset, parse_polynomial, parse_sets

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_GUARD = 4
EXIT_INTERNAL = 5


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_guard(parser: argparse.ArgumentParser, meaning: str):
    parser.add_argument("--guard", type=int, default=None, help=f"override the guard: {meaning}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--debug", action="store_true", help="debug logging on stderr")

    with_input = argparse.ArgumentParser(add_help=False, parents=[common])
    with_input.add_argument("input", nargs="?", default="-", help="point set file, '-' for stdin")
    with_input.add_argument("--sets", action="store_true", help="input lists sets ('1 3 4', '-' for the empty set) after a header 'n'")

    parser = _ArgumentParser(prog="extremal", description="Standard monomials, shattering and extremal point sets.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    sm = commands.add_parser("sm", parents=[with_input], help="lex standard monomials")
    sm.add_argument("--order", help="variables from most to least significant, e.g. 2,1")
    sm.add_argument("--oracle", action="store_true", help="also run the linear algebra oracle and compare")
    sm.add_argument("--all-orders", action="store_true", help="every lex order")
    _add_guard(sm, "largest n for which --all-orders enumerates the n! orders")

    downshift = commands.add_parser("downshift", parents=[with_input], help="D_{i1,...,il}(V), applied right to left")
    downshift.add_argument("--seq", required=True, help="indices i1,...,il; il is applied first")

    for name, description in (("shatter", "shattered sets, VC dimension and gap"), ("vcdim", "VC dimension")):
        _add_guard(commands.add_parser(name, parents=[with_input], help=description), "largest n for which all 2^n subsets are tested")

    extremal = commands.add_parser("extremal", parents=[with_input], help="decide extremality")
    extremal.add_argument("--method", default="fast", help="fast, brute or downshift")
    extremal.add_argument("--cross-check", action="store_true", help="run every method and require agreement")
    extremal.add_argument("-v", "--verbose", action="store_true", help="report standard monomials per order")
    _add_guard(extremal, "largest n for which the n! lex orders are enumerated")

    groebner = commands.add_parser("groebner", parents=[with_input], help="degree dominated universal Groebner basis")
    groebner.add_argument("--force", action="store_true", help="build a basis for one order even if V is not extremal")
    groebner.add_argument("--order", help="order used with --force")

    census_parser = commands.add_parser("census", parents=[common], help="classify every subset of a small grid")
    census_parser.add_argument("--n", type=int, required=True)
    census_parser.add_argument("--k", type=int, required=True)
    census_parser.add_argument("--predicate", choices=PREDICATES, default="extremal")
    _add_guard(census_parser, "largest grid size k^n to enumerate")

    reduce_parser = commands.add_parser("reduce", parents=[with_input], help="normal form modulo the universal basis of V")
    reduce_parser.add_argument("--poly", required=True, help="polynomial such as 'x1^2*x2 - 3/2*x1 + 1'")
    reduce_parser.add_argument("--order", help="order used for the reduction")
    reduce_parser.add_argument("--force", action="store_true", help="allow a non-extremal V")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        order=getattr(args, "order", None),
        seq=getattr(args, "seq", None),
        method=getattr(args, "method", "fast"),
        polynomial=getattr(args, "poly", None),
        census_n=getattr(args, "n", None),
        census_k=getattr(args, "k", None),
        predicate=getattr(args, "predicate", "extremal"),
        json=args.json,
        oracle=getattr(args, "oracle", False),
        all_orders=getattr(args, "all_orders", False),
        force=getattr(args, "force", False),
        sets=getattr(args, "sets", False),
        verbose=getattr(args, "verbose", False),
        debug=args.debug,
        cross_check=getattr(args, "cross_check", False),
        guard=getattr(args, "guard", None),
    )


def _read_input(run_config: RunConfig, stdin) -> str:
    if run_config.input_path in (None, "-"):
        return stdin.read()
    try:
        with open(run_config.input_path, "r", encoding="utf-8") as file:
            return file.read()
    except OSError as e:
        raise InputDataError(f"cannot read {run_config.input_path}: {e.strerror}")


def _parse_order(text: str | None, n: int) -> LexOrder:
    if text is None:
        return LexOrder.identity(n)
    try:
        return LexOrder.parse(text, n)
    except (DomainError, DimensionMismatchError) as e:
        raise UsageError(f"invalid --order: {e}")


def _parse_indices(text: str, n: int) -> tuple[int, ...]:
    try:
        indices = tuple(int(part) - 1 for part in text.replace(" ", "").split(",") if part)
    except ValueError:
        raise UsageError(f"invalid --seq '{text}'")
    if any(not 0 <= i < n for i in indices):
        raise UsageError(f"--seq entries must lie in 1..{n}")
    return indices


def _emit(out, payload: dict, lines: list[str], as_json: bool):
    if as_json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("".join(line + "\n" for line in lines))


def run(run_config: RunConfig, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        _dispatch(run_config, stdin, stdout, stderr)
        return EXIT_OK
    except (UsageError, ConfigurationError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except (InputDataError, DomainError, DimensionMismatchError) as e:
        print(f"input error: {e}", file=stderr)
        return EXIT_INPUT
    except PreconditionError as e:
        print(f"precondition failed: {e}", file=stderr)
        return EXIT_PRECONDITION
    except GuardExceededError as e:
        print(f"guard exceeded: {e}", file=stderr)
        return EXIT_GUARD
    except ContractViolationError as e:
        logger.exception("internal consistency failure")
        print(f"internal error: {e}", file=stderr)
        return EXIT_INTERNAL


def _dispatch(run_config: RunConfig, stdin, stdout, stderr):
    if run_config.command == "census":
        _census(run_config, stdout)
        return

    text = _read_input(run_config, stdin)
    family = None
    if run_config.sets:
        family = parse_sets(text)
        V = family.to_point_set()
    else:
        V = parse_pointset(text)
    if V.duplicates:
        print(f"warning: {V.duplicates} duplicate{'s' if V.duplicates != 1 else ''} dropped", file=stderr)
        logger.debug("%d duplicate points dropped", V.duplicates)

    handlers = {
        "sm": _sm,
        "downshift": _downshift,
        "shatter": _shatter,
        "vcdim": _vcdim,
        "extremal": _extremal,
        "groebner": _groebner,
        "reduce": _reduce,
    }
    if run_config.command not in handlers:
        raise UsageError(f"unknown command '{run_config.command}'")
    handlers[run_config.command](run_config, V, family, stdout)


def _sm(run_config, V, family, out):
    if run_config.all_orders:
        results = list(sm_all_lex(V, run_config.guard).values())
    else:
        results = [sm_lex(V, _parse_order(run_config.order, V.n))]

    if run_config.oracle:
        for result in results:
            if sm_oracle(V, result.order).monomials != result.monomials:
                raise ContractViolationError(f"sectioning recursion and oracle disagree for the order {result.order}")

    if run_config.all_orders:
        payload = {"orders": [r.to_json() for r in results]}
        lines = []
        for r in results:
            lines.append(f"order {r.order}:")
            lines.extend(r.render())
    else:
        payload = results[0].to_json()
        lines = results[0].render()
    _emit(out, payload, lines, run_config.json)


def _downshift(run_config, V, family, out):
    seq = _parse_indices(run_config.seq, V.n)
    shifted = downshift_seq(V, seq)
    payload = {"seq": [i + 1 for i in seq], "n": shifted.n, "k": shifted.k, "points": [list(p) for p in shifted]}
    _emit(out, payload, shifted.serialize().splitlines(), run_config.json)


def _shatter(run_config, V, family, out):
    report = shattered_family(V, run_config.guard)
    lines = [render_set(s) for s in sorted(report.shattered, key=lambda s: (len(s), sorted(s)))]
    lines.append(f"vc_dim: {report.vc_dim}")
    lines.append(f"gap: {report.extremal_gap}")
    if report.s_extremal is not None:
        lines.append(f"s_extremal: {str(report.s_extremal).lower()}")
    _emit(out, report.to_json(), lines, run_config.json)


def _vcdim(run_config, V, family, out):
    report = shattered_family(V, run_config.guard)
    _emit(out, {"vc_dim": report.vc_dim}, [str(report.vc_dim)], run_config.json)


def _extremal(run_config, V, family, out):
    factory = ExtremalityDeciderFactory()
    if run_config.method not in factory.deciders():
        raise UsageError(f"unknown --method '{run_config.method}', expected one of {sorted(factory.deciders())}")
    if run_config.cross_check:
        verdicts = cross_check(V, run_config.guard)
        verdict = verdicts.get(run_config.method, verdicts["fast"])
    else:
        verdict = factory.create(run_config.method, guard=run_config.guard).decide(V)

    lines = ["extremal" if verdict.extremal else "not extremal"]
    if verdict.sm is not None:
        lines.append("sm: " + ", ".join(verdict.sm.render()))
    if verdict.witness is not None:
        first, second = verdict.witness
        lines.append(f"witness orders: {first} | {second}")
    if run_config.verbose and verdict.per_order_sm:
        for order, monomials in verdict.per_order_sm.items():
            lines.append(f"order {order}: " + ", ".join(monomials.render(order)))
    _emit(out, verdict.to_json(verbose=run_config.verbose), lines, run_config.json)


def _groebner(run_config, V, family, out):
    pipeline = CertificationPipelineFactory().create()
    if family is not None:
        basis = set_system_basis(family, pipeline=pipeline)
    else:
        order = _parse_order(run_config.order, V.n) if run_config.order else None
        basis = universal_basis(V, force=run_config.force, order=order, pipeline=pipeline)

    lines = basis.render()
    if not basis.order_free:
        lines.append(f"# Groebner basis for the order {basis.order} only")
    _emit(out, basis.to_json(), lines, run_config.json)


def _reduce(run_config, V, family, out):
    order = _parse_order(run_config.order, V.n)
    p = parse_polynomial(run_config.polynomial, V.n)
    basis = universal_basis(V, force=run_config.force, order=order, pipeline=CertificationPipelineFactory().create())
    normal_form = reduce(p, basis, order)
    payload = {"order": order.one_based(), "polynomial": p.render(order), "normal_form": normal_form.render(order)}
    _emit(out, payload, [normal_form.render(order)], run_config.json)


def _census(run_config, out):
    summary = census(run_config.census_n, run_config.census_k, run_config.predicate, guard=run_config.guard)
    lines = ["size total extremal"]
    lines.extend(f"{row.size} {row.total} {row.extremal}" for row in summary.rows)
    lines.append(f"extremal: {summary.extremal}/{summary.total}")
    lines.append(f"selected ({summary.predicate}): {summary.selected}")
    for V in summary.non_extremal_examples:
        lines.append("non-extremal: " + " ".join("(" + ",".join(map(str, p)) + ")" for p in V))
    _emit(out, summary.to_json(), lines, run_config.json)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_USAGE
    run_config = config_from_args(args)
    try:
        configure_logging(verbose=run_config.debug)
    except ValueError as e:
        print(f"error: bad logging configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    return run(run_config)
