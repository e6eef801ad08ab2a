import argparse

from ..services.report_renderer import render
from ..verification.expected import EXPECTED, constant_names, corrupt
from ..verification.runner import run_verification
from .common import EXIT_IDENTITY_FAILURE, EXIT_OK, add_format_argument, add_output_argument, emit, output_format


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="check every identity by enumeration up to n_max")
    parser.add_argument(
        "--n-max", type=int, default=4,
        help="largest pair parameter n; the suite enumerates S_(n_max+1), so n_max + 1 must fit the enumeration bound",
    )
    parser.add_argument("--seed", type=int, default=None, help="seed for the random inputs")
    parser.add_argument(
        "--corrupt", choices=constant_names(), default=None, metavar="NAME",
        help="replace one expected constant with a wrong value; the run must then fail",
    )
    add_format_argument(parser)
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    expected = corrupt(args.corrupt) if args.corrupt else EXPECTED
    report = run_verification(args.n_max, expected, seed=args.seed, corrupted=args.corrupt)
    emit(render(report, output_format(args)), args.output)
    return EXIT_OK if report.passed else EXIT_IDENTITY_FAILURE
