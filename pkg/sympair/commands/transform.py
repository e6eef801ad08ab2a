import argparse
from pathlib import Path

from loguru import logger

from ..exceptions import DegreeMismatchError
from ..schemas.schemas import TransformReport
from ..services.function_file import read_function
from ..services.gelfand import BiinvariantFn, is_biinvariant
from ..services.group_algebra import AlgebraElement
from ..services.report_renderer import render
from ..services.spherical_fourier import invert_biinvariant, lambda_averages, transform_pair
from .common import EXIT_IDENTITY_FAILURE, EXIT_OK, add_format_argument, add_output_argument, emit, output_format


def register(subparsers) -> None:
    parser = subparsers.add_parser("transform", help="spherical Fourier transform of a function on S_(n+1)")
    parser.add_argument("input", type=Path, help="function file")
    parser.add_argument("--degree", type=int, default=None, help="pair parameter n; the input lives on S_(n+1)")
    add_format_argument(parser)
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def build_report(f: AlgebraElement, n: int) -> TransformReport:
    lambda1, lambda2 = lambda_averages(f, n)
    coefficients = transform_pair(f, n)
    biinvariant = is_biinvariant(f)
    if biinvariant:
        exact = invert_biinvariant(coefficients) == BiinvariantFn.from_element(f)
        round_trip = "exact" if exact else "failed"
    else:
        logger.warning("Input is not biinvariant; the transform only sees its projection")
        round_trip = "n/a (projected)"
    return TransformReport(
        n=n,
        lambda1=lambda1,
        lambda2=lambda2,
        fhat=coefficients.coef_phi,
        coef_trivial=coefficients.coef_trivial,
        coef_phi=coefficients.coef_phi,
        biinvariant=biinvariant,
        round_trip=round_trip,
    )


def run(args: argparse.Namespace) -> int:
    f = read_function(args.input)
    n = f.degree - 1 if args.degree is None else args.degree
    if f.degree != n + 1:
        raise DegreeMismatchError(f"input has degree {f.degree}, expected {n + 1} for n = {n}")
    report = build_report(f, n)
    emit(render(report, output_format(args)), args.output)
    return EXIT_IDENTITY_FAILURE if report.round_trip == "failed" else EXIT_OK
