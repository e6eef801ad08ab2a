import argparse
from math import factorial

from ..schemas.schemas import ShapeSummary, TableauxReport
from ..services.group_algebra import essential_idempotency
from ..services.perm_core import check_bound
from ..services.report_renderer import render
from ..services.young import (
    column_stabilizer, ideal_dimension, partitions_of, polytabloid, row_stabilizer,
    standard_tableaux, superstandard_tableau,
)
from .common import EXIT_IDENTITY_FAILURE, EXIT_OK, add_format_argument, add_output_argument, emit, output_format


def register(subparsers) -> None:
    parser = subparsers.add_parser("tableaux", help="shapes, stabilizers and left-ideal dimensions of S_m")
    parser.add_argument("--degree", type=int, required=True, help="m, the degree of S_m")
    add_format_argument(parser)
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def build_report(m: int) -> TableauxReport:
    check_bound(m)
    shapes = []
    for shape in partitions_of(m):
        t = superstandard_tableau(shape)
        e_t = polytabloid(t)
        shapes.append(ShapeSummary(
            shape=str(shape),
            standard_tableaux=len(standard_tableaux(shape)),
            row_stabilizer=len(row_stabilizer(t)),
            column_stabilizer=len(column_stabilizer(t)),
            support=len(e_t.coeffs),
            idempotency=essential_idempotency(e_t),
            dimension=ideal_dimension(shape, t),
        ))
    return TableauxReport(
        n=m,
        shapes=shapes,
        sum_of_squares=sum(s.dimension ** 2 for s in shapes),
        group_order=factorial(m),
    )


def run(args: argparse.Namespace) -> int:
    report = build_report(args.degree)
    emit(render(report, output_format(args)), args.output)
    return EXIT_OK if report.sum_of_squares == report.group_order else EXIT_IDENTITY_FAILURE
