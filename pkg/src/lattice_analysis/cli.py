""" Command line front end: relcomp <command> ... """
import argparse
import logging
import sys

from lattice_analysis.Closure import closed_family, closure
from lattice_analysis.Complement import bar, check_induced, complements, hat, rel_complements
from lattice_analysis.Constructors import make_boolean, make_mn
from lattice_analysis.Enumerate import DEFAULT_SUITE_SIZE, run_suite
from lattice_analysis.Interval import Interval
from lattice_analysis.Lattice import Lattice
from lattice_analysis.LatticeException import (
    BadFactors,
    DegenerateInterval,
    InjectivityFailed,
    LatticeException,
    MnTooSmall,
    NotComparable,
    NotComplemented,
    OutsideInterval,
    SizeBound,
    UniverseMismatch,
    UnknownElement,
    UnknownStatement,
)
from lattice_analysis.LatticeReader import read_lattice
from lattice_analysis.Regression import paper_regress
from lattice_analysis.Structure import is_complemented, is_distributive, is_modular, is_rel_complemented
from lattice_analysis.Verify import resolve_statements, run_statements, verify_th1

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INVALID = 2
EXIT_BAD_QUERY = 3

QUERY_ERRORS = (UnknownElement, NotComparable, OutsideInterval, DegenerateInterval, UnknownStatement, SizeBound,
                BadFactors, MnTooSmall, NotComplemented, InjectivityFailed, UniverseMismatch)

logger = logging.getLogger(__name__)


def _interval(L: Lattice, a: str, b: str) -> Interval:
    return Interval(L, L.get_element_id(a), L.get_element_id(b))


def cmd_validate(args) -> int:
    L = read_lattice(args.file)
    print(f"ok: {L.get_name()}, {len(L)} elements, {len(L.get_edges())} covers")
    return EXIT_OK


def cmd_info(args) -> int:
    L = read_lattice(args.file)
    name = L.get_node_name
    print(f"lattice {L.get_name()}")
    print(f"elements {len(L)}")
    print(f"bottom {name(L.get_bottom())}")
    print(f"top {name(L.get_top())}")
    print(f"modular {str(is_modular(L)).lower()}")
    print(f"distributive {str(is_distributive(L)).lower()}")
    print(f"complemented {str(is_complemented(L)).lower()}")
    print(f"relatively-complemented {str(is_rel_complemented(L)).lower()}")
    return EXIT_OK


def cmd_comp(args) -> int:
    L = read_lattice(args.file)
    print(complements(L, L.get_element_id(args.x)))
    return EXIT_OK


def cmd_relcomp(args) -> int:
    L = read_lattice(args.file)
    print(rel_complements(_interval(L, args.a, args.b), L.get_element_id(args.x)))
    return EXIT_OK


def cmd_bar(args) -> int:
    L = read_lattice(args.file)
    I = _interval(L, args.a, args.b)
    x = L.get_element_id(args.x)
    I.require(x)
    print(bar(I, x))
    return EXIT_OK


def cmd_hat(args) -> int:
    L = read_lattice(args.file)
    I = _interval(L, args.a, args.b)
    x = L.get_element_id(args.x)
    I.require(x)
    print(hat(I, x))
    return EXIT_OK


def cmd_induced(args) -> int:
    L = read_lattice(args.file)
    report = check_induced(_interval(L, args.a, args.b), L.get_element_id(args.z), L.get_element_id(args.u))
    print(report.describe(), end="")
    return EXIT_OK


def cmd_closure(args) -> int:
    L = read_lattice(args.file)
    print(closure(_interval(L, args.a, args.b), L.elements(*args.x)))
    return EXIT_OK


def cmd_closed_sets(args) -> int:
    L = read_lattice(args.file)
    family = closed_family(_interval(L, args.a, args.b))
    for i, closed in enumerate(family):
        print(f"{i:>4}  {closed}  ortho {family.ortho(i)}")
    print(f"{len(family)} closed sets")
    return EXIT_OK


def cmd_check(args) -> int:
    L = read_lattice(args.file)
    statements = resolve_statements(None if args.all else args.statement)
    reports = run_statements(L, statements)
    for report in reports:
        print(report.describe())
    return EXIT_OK if all(report.holds for report in reports) else EXIT_VIOLATED


def cmd_enumerate(args) -> int:
    run = run_suite(args.max, args.statement, jobs=args.jobs)
    for size, count in run.count_by_size.items():
        print(f"size {size}: {count} lattices")
    print(f"{'statement':<22} {'verified':>8} {'vacuous':>8} {'hyp.fail':>8} {'violated':>8}")
    for statement, verified, vacuous, failed, violated in run.summary():
        print(f"{statement:<22} {verified:>8} {vacuous:>8} {failed:>8} {violated:>8}")
    for report in run.failures:
        print(report.describe())
    return EXIT_OK if not run.failures else EXIT_VIOLATED


def cmd_paper_regress(args) -> int:
    failed = 0
    for assertion, observed, passed in paper_regress():
        failed += not passed
        expected = "" if assertion.expected else " (expected false)"
        print(f"{'PASS' if passed else 'FAIL'}  {assertion.figure:<5} {assertion.claim}: {str(observed).lower()}{expected}")
    return EXIT_OK if not failed else EXIT_VIOLATED


def cmd_dot(args) -> int:
    print(read_lattice(args.file).to_dot(), end="")
    return EXIT_OK


def cmd_th1(args) -> int:
    factors = [make_boolean(args.boolean)] + [make_mn(n) for n in args.mn]
    report = verify_th1(factors)
    print(report.describe())
    return EXIT_OK if report.holds else EXIT_VIOLATED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relcomp", description="Relative complementation in finite lattices")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, *positional: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        for argument in positional:
            sub.add_argument(argument)
        sub.set_defaults(handler=handler)
        return sub

    command("validate", cmd_validate, "parse and validate a lattice file", "file")
    command("info", cmd_info, "bounds and structural flags", "file")
    command("comp", cmd_comp, "complements x+ of x", "file", "x")
    command("relcomp", cmd_relcomp, "relative complements x^{ab}", "file", "a", "b", "x")
    command("bar", cmd_bar, "(x+ v a) ^ b", "file", "a", "b", "x")
    command("hat", cmd_hat, "(x+ ^ b) v a", "file", "a", "b", "x")
    command("induced", cmd_induced, "conditions (1) and (2) for u and z in [a, b]", "file", "a", "b", "u", "z")
    closure_parser = command("closure", cmd_closure, "(A^{ab})^{ab}", "file", "a", "b")
    closure_parser.add_argument("x", nargs="*")
    command("closed-sets", cmd_closed_sets, "the closed sets of [a, b] with their orthocomplements", "file", "a", "b")

    check = command("check", cmd_check, "run statement checkers on a lattice", "file")
    selection = check.add_mutually_exclusive_group()
    selection.add_argument("--statement", action="append", help="statement id or pattern, may repeat")
    selection.add_argument("--all", action="store_true")

    enumerate_parser = command("enumerate", cmd_enumerate, "run statement checkers on every lattice up to a size")
    enumerate_parser.add_argument("--max", type=int, default=DEFAULT_SUITE_SIZE)
    enumerate_parser.add_argument("--statement", action="append")
    enumerate_parser.add_argument("--jobs", type=int, default=1)

    command("paper-regress", cmd_paper_regress, "assertions about the shipped figures")
    command("dot", cmd_dot, "Hasse diagram in DOT format", "file")

    th1 = command("th1", cmd_th1, "closure identity on a product of a Boolean algebra and M_n's")
    th1.add_argument("--boolean", type=int, default=1)
    th1.add_argument("--mn", type=int, action="append", default=[])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except QUERY_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_QUERY
    except (LatticeException, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
