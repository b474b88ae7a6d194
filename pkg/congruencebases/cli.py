# -*- coding: utf-8 -*-
"""
Command-line front end.

    congruencebases solve     "2x - 6y ≡ 2 (mod 12)" --limit 10
    congruencebases enumerate "2x - 6y ≡ 2 (mod 12)" --limit 5 --format json
    congruencebases check     "2x - 6y ≡ 2 (mod 12)" 7,4 1,0
    congruencebases verify    "2x - 6y ≡ 2 (mod 12)" --cap 1000000
    congruencebases verify    --random 200 --seed 7
    congruencebases plot      "2x - 6y ≡ 2 (mod 12)" --output app.png

Instead of an expression, `--coeffs=2,-6 --rhs 2 --mod 12` (or a JSON list
for --coeffs) gives the congruence directly; unknowns are then named x1..xn.
An expression of `-` is read from stdin.

Exit codes: 0 success, 2 usage/parse/sizing error, 3 unsolvable,
4 oracle mismatch.
"""
from typing import List, NamedTuple, Optional, Sequence, TextIO, Tuple
import argparse
import json
import logging
import sys

from . import congruence
from . import oracle
from . import parser
from . import procedures
from . import utils
from .system import CongruenceSystem

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSOLVABLE = 3
EXIT_MISMATCH = 4

FORMATS = ["text", "json"]
LOG_FORMAT = "%(asctime)-15s [%(levelname)s] %(message)s"


class UsageError(ValueError):
    pass


class OutputRecord(NamedTuple):
    summary: congruence.SolveSummary
    basis: Optional[List[Tuple[int, ...]]] = None
    solutions: Optional[List[Tuple[int, ...]]] = None
    truncated: bool = False

    def to_json_dict(self) -> dict:
        return {
            "d": str(self.summary.d),
            "solvable": self.summary.solvable,
            "p1": str(self.summary.p1),
            "p2": str(self.summary.p2),
            "s": str(self.summary.s),
            "basis": None if self.basis is None else [list(x) for x in self.basis],
            "solutions": None if self.solutions is None else [list(x) for x in self.solutions],
            "truncated": self.truncated,
        }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("expr", nargs="?", default=None,
                        help="Congruence such as '2x - 6y ≡ 2 (mod 12)'; '-' reads stdin")
    common.add_argument("--coeffs", default=None,
                        help="Coefficients as '2,-6' or '[2, -6]' (use --coeffs=-2,6 for a leading minus)")
    common.add_argument("--rhs", type=int, default=None, help="Right-hand side with --coeffs")
    common.add_argument("--mod", type=int, default=None, help="Modulus with --coeffs")
    common.add_argument("--format", choices=FORMATS, default="text", help="Output format")
    common.add_argument("--order", choices=procedures.CANDIDATE_ORDERS, default="forward",
                        help="Candidate order for the basis search")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log to stderr (-v info, -vv debug)")

    main_parser = argparse.ArgumentParser(
        prog="congruencebases",
        description="Solve linear congruences a1*x1 + ... + an*xn ≡ b (mod m) through bases of solutions")
    subparsers = main_parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser("solve", parents=[common],
                                  help="Counts and a basis of solutions")
    solve.add_argument("--limit", type=int, default=None,
                       help="Print at most this many basis elements")
    solve.set_defaults(handler=cmd_solve)

    enumerate_ = subparsers.add_parser("enumerate", parents=[common],
                                       help="Every distinct solution, expanded from the basis")
    enumerate_.add_argument("--limit", type=int, default=None,
                            help="Stop after this many solutions")
    enumerate_.set_defaults(handler=cmd_enumerate)

    check = subparsers.add_parser("check", parents=[common],
                                  help="Whether two solutions are dependent")
    check.add_argument("sol_a", help="Residue vector such as 7,4")
    check.add_argument("sol_b", help="Residue vector such as 1,0")
    check.set_defaults(handler=cmd_check)

    verify = subparsers.add_parser("verify", parents=[common],
                                   help="Cross-check against an exhaustive scan")
    verify.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP,
                        help="Largest m^n the scan accepts")
    verify.add_argument("--random", type=int, default=None, metavar="N",
                        help="Verify N seeded random instances instead of EXPR")
    verify.add_argument("--seed", type=int, default=0, help="Seed for --random")
    verify.set_defaults(handler=cmd_verify)

    plot = subparsers.add_parser("plot", parents=[common],
                                 help="Draw the solutions of a two-unknown congruence")
    plot.add_argument("--output", required=True, help="Image file to write")
    plot.set_defaults(handler=cmd_plot)
    return main_parser


def load_system(args, stdin: TextIO) -> CongruenceSystem:
    if args.coeffs is not None:
        if args.rhs is None or args.mod is None:
            raise UsageError("--coeffs needs both --rhs and --mod")
        if args.expr is not None:
            raise UsageError("Give either an expression or --coeffs, not both")
        try:
            coeffs = _parse_coefficients(args.coeffs)
        except ValueError as e:
            raise UsageError("Could not read --coeffs %r: %s" % (args.coeffs, e)) from e
        return CongruenceSystem(coeffs, args.rhs, args.mod, args.order)
    text = args.expr
    if text is None:
        raise UsageError("Give an expression or --coeffs/--rhs/--mod")
    if text == "-":
        lines = [line for line in stdin.read().splitlines() if line.strip()]
        if not lines:
            raise UsageError("No congruence on stdin")
        text = lines[0]
    return CongruenceSystem.from_expression(text, args.order)


def _parse_coefficients(text):
    if text.strip().startswith("["):
        values = json.loads(text)
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise ValueError("expected a JSON list of integers")
        return values
    return list(utils.parse_residues(text))


def cmd_solve(syst: CongruenceSystem, args, out: TextIO) -> int:
    summary = syst.summary()
    limit = _check_limit(args.limit)
    if not summary.solvable:
        if args.format == "json":
            _write_json(OutputRecord(summary), out)
        else:
            _write_summary(syst, out)
        return EXIT_UNSOLVABLE
    truncated = limit is not None and limit < summary.s
    if args.format == "json":
        basis = [x.residues for x in syst.basis_elements(limit)]
        _write_json(OutputRecord(summary, basis=basis, truncated=truncated), out)
        return EXIT_OK
    _write_summary(syst, out)
    out.write("basis:\n")
    out.flush()
    for x in syst.basis_elements(limit):
        out.write(utils.format_residues(x.residues) + "\n")
    if truncated:
        sys.stderr.write("truncated after %d of %d basis elements\n" % (limit, summary.s))
    return EXIT_OK


def cmd_enumerate(syst: CongruenceSystem, args, out: TextIO) -> int:
    summary = syst.summary()
    if not summary.solvable:
        if args.format == "json":
            _write_json(OutputRecord(summary), out)
        sys.stderr.write("%s has no solutions\n" % syst.render())
        return EXIT_UNSOLVABLE
    limit = _check_limit(args.limit)
    truncated = limit is not None and limit < summary.p1
    if args.format == "json":
        solutions = [x.residues for x in syst.solutions(limit)]
        _write_json(OutputRecord(summary, solutions=solutions, truncated=truncated), out)
    else:
        for x in syst.solutions(limit):
            out.write(utils.format_residues(x.residues) + "\n")
        if truncated:
            sys.stderr.write("truncated after %d of %d solutions\n" % (limit, summary.p1))
    return EXIT_OK


def cmd_check(syst: CongruenceSystem, args, out: TextIO) -> int:
    try:
        a = utils.parse_residues(args.sol_a)
        b = utils.parse_residues(args.sol_b)
    except ValueError as e:
        raise UsageError("Could not read residue vector: %s" % e) from e
    for vector in (a, b):
        if len(vector) != syst.arity:
            raise UsageError("Vector %s has %d entries, the congruence has %d unknowns"
                             % (vector, len(vector), syst.arity))
        if not syst.is_solution(vector):
            logger.warning("%s is not a solution of %s", vector, syst.render())
    x, y = syst.solution(a), syst.solution(b)
    dependent = syst.check(a, b)
    parameters = syst.parameters(b, a)
    m = syst.congruence.modulus
    rows = []
    for name, xi, yi, g in zip(syst.variables, x.residues, y.residues, syst.module.strides):
        difference = (xi - yi) % m
        rows.append((name, xi, yi, difference, g, difference % g == 0))
    if args.format == "json":
        payload = {
            "verdict": "dependent" if dependent else "independent",
            "differences": [row[3] for row in rows],
            "strides": [row[4] for row in rows],
            "parameters": None if parameters is None else list(parameters),
        }
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
        return EXIT_OK
    out.write(("dependent" if dependent else "independent") + "\n")
    for name, xi, yi, difference, g, divisible in rows:
        out.write("%s: %d - %d = %d (mod %d), stride %d: %s\n"
                  % (name, xi, yi, difference, m, g,
                     "divisible" if divisible else "not divisible"))
    if parameters is not None:
        out.write("(%s) = (%s) expanded with t = (%s)\n"
                  % (utils.format_residues(x.residues), utils.format_residues(y.residues),
                     utils.format_residues(parameters)))
    return EXIT_OK


def cmd_verify(syst: CongruenceSystem, args, out: TextIO) -> int:
    report = syst.verify(args.cap)
    summary = syst.summary()
    if args.format == "json":
        payload = {
            "solution_count": str(report.solution_count),
            "p1": str(summary.p1),
            "solvable": summary.solvable,
            "agrees_with_summary": report.agrees_with_summary,
            "agrees_with_basis": report.agrees_with_basis,
        }
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        out.write("congruence: %s\n" % syst.render())
        out.write("solution_count = %d\n" % report.solution_count)
        out.write("P1 = %d\n" % summary.p1)
        out.write("solvable = %s\n" % _bool(summary.solvable))
        out.write("agrees_with_summary = %s\n" % _bool(report.agrees_with_summary))
        out.write("agrees_with_basis = %s\n" % _bool(report.agrees_with_basis))
    return EXIT_OK if report.agrees else EXIT_MISMATCH


def cmd_verify_random(args, out: TextIO) -> int:
    instances = oracle.random_congruences(args.random, args.seed)
    reports = oracle.verify_batch(instances, args.cap)
    failures = [(c, r) for c, r in zip(instances, reports) if not r.agrees]
    if args.format == "json":
        payload = {
            "instances": len(instances),
            "agreeing": len(instances) - len(failures),
            "failures": [{"coeffs": list(c.coeffs), "rhs": c.rhs, "mod": c.modulus}
                         for c, _ in failures],
        }
        out.write(json.dumps(payload) + "\n")
    else:
        out.write("%d instances, %d agree\n" % (len(instances), len(instances) - len(failures)))
        for c, report in failures:
            out.write("mismatch: coeffs=%s rhs=%d mod=%d count=%d\n"
                      % (list(c.coeffs), c.rhs, c.modulus, report.solution_count))
    return EXIT_OK if not failures else EXIT_MISMATCH


def cmd_plot(syst: CongruenceSystem, args, out: TextIO) -> int:
    from . import visualizer
    visualizer.SolutionPlot(syst).save(args.output)
    out.write("wrote %s\n" % args.output)
    return EXIT_OK if syst.solvable else EXIT_UNSOLVABLE


def main(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None,
         out: Optional[TextIO] = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        if args.command == "verify" and args.random is not None:
            if args.random < 1:
                raise UsageError("--random needs a positive count")
            return cmd_verify_random(args, out)
        syst = load_system(args, stdin)
        return args.handler(syst, args, out)
    except (UsageError, parser.CongruenceSyntaxError,
            congruence.CongruenceValidationError, oracle.OracleSizeError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_USAGE


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def _check_limit(limit):
    if limit is not None and limit < 0:
        raise UsageError("--limit must be nonnegative")
    return limit


def _write_summary(syst, out):
    summary = syst.summary()
    out.write("congruence: %s\n" % syst.render())
    out.write("d = %d\n" % summary.d)
    out.write("solvable = %s\n" % _bool(summary.solvable))
    out.write("homogeneous = %s\n" % _bool(syst.congruence.is_homogeneous))
    out.write("P1 = %d\n" % summary.p1)
    out.write("P2 = %d\n" % summary.p2)
    out.write("S = %d\n" % summary.s)


def _write_json(record, out):
    out.write(json.dumps(record.to_json_dict(), ensure_ascii=False) + "\n")


def _bool(value):
    return "true" if value else "false"


if __name__ == "__main__":
    sys.exit(main())
