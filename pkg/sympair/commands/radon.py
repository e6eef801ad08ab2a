import argparse
import sys
from pathlib import Path

from loguru import logger

from ..config import settings
from ..exceptions import DegreeMismatchError, DomainError
from ..schemas.schemas import CosetRadonReport, CosetRadonRow, DivisorRadonReport, DivisorRadonRow
from ..services.function_file import format_arithmetic, read_arithmetic, read_function
from ..services.radon import ArithmeticFn, coset_table, divisor_radon_table, mobius_invert
from ..services.report_renderer import render
from .common import EXIT_OK, add_format_argument, add_output_argument, emit, output_format


def register(subparsers) -> None:
    parser = subparsers.add_parser("radon", help="horocyclic and divisor Radon transforms")
    parser.add_argument(
        "mode", choices=["group", "divisor", "invert"],
        help="group: R f on S_(n+1)/S_n; divisor: R f(1..M) on N*; invert: Moebius reconstruction of f(1..M)",
    )
    parser.add_argument("input", type=Path, nargs="?", default=None,
                        help="function file (group mode) or 'index value' table")
    parser.add_argument("--degree", type=int, default=None, help="pair parameter n for group mode")
    parser.add_argument("--power", type=float, default=None,
                        help="use f(k) = k^-s instead of an input table")
    parser.add_argument("--truncation", type=int, default=None,
                        help=f"table bound N (default: {settings.divisor_truncation} with --power)")
    parser.add_argument("--terms", type=int, default=10, help="rows M to emit")
    parser.add_argument("--decay-exponent", type=float, default=None,
                        help="s with |f(k)| <= c k^-s; reports the truncation tail bound")
    parser.add_argument("--from-radon", action="store_true",
                        help="invert mode: the input table already holds R f")
    add_format_argument(parser)
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def _group(args: argparse.Namespace) -> CosetRadonReport:
    if args.input is None:
        raise DomainError("group mode needs a function file")
    f = read_function(args.input)
    n = f.degree - 1 if args.degree is None else args.degree
    if f.degree != n + 1:
        raise DegreeMismatchError(f"input has degree {f.degree}, expected {n + 1} for n = {n}")
    rows = [
        CosetRadonRow(label=label, representative=representative, value=value)
        for label, representative, value in coset_table(f, n)
    ]
    return CosetRadonReport(n=n, rows=rows)


def _arithmetic_input(args: argparse.Namespace) -> ArithmeticFn:
    exponent = args.decay_exponent
    if args.power is not None:
        if args.input is not None:
            raise DomainError("give either an input table or --power, not both")
        N = args.truncation or settings.divisor_truncation
        s = args.power
        return ArithmeticFn.from_callable(lambda k: k ** -s, N, exponent if exponent is not None else s)
    if args.input is None:
        raise DomainError(f"{args.mode} mode needs an input table or --power")
    return read_arithmetic(args.input, args.truncation, exponent)


def _tail_bound(f: ArithmeticFn) -> float | None:
    if f.decay_exponent is None or f.decay_exponent <= 2:
        return None
    bound = f.tail_bound(1)
    if bound > settings.divisor_tolerance:
        logger.warning(f"Truncation tail bound {bound:.3g} exceeds tolerance {settings.divisor_tolerance}")
    return bound


def _divisor(args: argparse.Namespace) -> DivisorRadonReport:
    f = _arithmetic_input(args)
    count = min(args.terms, f.N)
    rf = divisor_radon_table(f)
    return DivisorRadonReport(
        mode="divisor",
        truncation=f.N,
        rows=[DivisorRadonRow(index=k, value=rf(k)) for k in range(1, count + 1)],
        decay_exponent=f.decay_exponent,
        tail_bound=_tail_bound(f),
    )


def _invert(args: argparse.Namespace) -> DivisorRadonReport:
    f = _arithmetic_input(args)
    count = min(args.terms, f.N)
    if args.from_radon:
        rf, reference = f, None
    else:
        rf, reference = divisor_radon_table(f), f
    rows = [
        DivisorRadonRow(
            index=k,
            value=mobius_invert(rf, k),
            reference=None if reference is None else reference(k),
        )
        for k in range(1, count + 1)
    ]
    max_error = None
    if reference is not None:
        max_error = max(abs(row.value - row.reference) for row in rows)
    return DivisorRadonReport(
        mode="invert",
        truncation=f.N,
        rows=rows,
        decay_exponent=f.decay_exponent,
        tail_bound=_tail_bound(f),
        max_error=max_error,
    )


def run(args: argparse.Namespace) -> int:
    if args.terms < 1:
        raise DomainError(f"--terms must be at least 1, got {args.terms}")
    build = {"group": _group, "divisor": _divisor, "invert": _invert}[args.mode]
    report = build(args)
    fmt = output_format(args)
    if fmt == "text" and isinstance(report, DivisorRadonReport):
        # The table owns stdout in the arithmetic file format; the summary goes to stderr
        table = ArithmeticFn.from_values([row.value for row in report.rows])
        emit(format_arithmetic(table), args.output)
        sys.stderr.write(render(report, fmt))
    else:
        emit(render(report, fmt), args.output)
    return EXIT_OK
