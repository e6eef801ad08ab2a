import argparse
import sys
from pathlib import Path

from ..exceptions import DegreeMismatchError
from ..schemas.schemas import HeatReport
from ..services.function_file import format_function, read_function
from ..services.heat import heat_iterate, heat_solve
from ..services.report_renderer import render
from .common import EXIT_IDENTITY_FAILURE, EXIT_OK, add_format_argument, add_output_argument, emit, output_format

# Explicit iteration beyond this many steps adds nothing: nu * nu = nu
ITERATION_CAP = 10


def register(subparsers) -> None:
    parser = subparsers.add_parser("heat", help="solve the discrete heat equation on S_(n+1)")
    parser.add_argument("input", type=Path, help="function file holding f_0")
    parser.add_argument("--steps", type=int, required=True, help="time k >= 0")
    parser.add_argument("--degree", type=int, default=None, help="pair parameter n; the input lives on S_(n+1)")
    add_format_argument(parser)
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    f0 = read_function(args.input)
    n = f0.degree - 1 if args.degree is None else args.degree
    if f0.degree != n + 1:
        raise DegreeMismatchError(f"input has degree {f0.degree}, expected {n + 1} for n = {n}")
    fk = heat_solve(f0, args.steps, n)
    checked = min(args.steps, ITERATION_CAP)
    matches = heat_iterate(f0, checked, n) == heat_solve(f0, checked, n)
    report = HeatReport(n=n, steps=args.steps, matches_iteration=matches, total_mass=fk.total_mass)

    emit(format_function(fk), args.output)
    # The solution owns stdout; the agreement report goes to stderr
    sys.stderr.write(render(report, output_format(args)))
    return EXIT_OK if matches else EXIT_IDENTITY_FAILURE
