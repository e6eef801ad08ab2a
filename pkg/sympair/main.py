import argparse
import sys

from loguru import logger

from .commands import heat, radon, tableaux, transform, verify
from .commands.common import EXIT_USAGE
from .config import settings
from .exceptions import SympairError

COMMANDS = [transform, verify, heat, radon, tableaux]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympair",
        description="Exact harmonic analysis on the Gelfand pair (S_(n+1), S_n)",
    )
    parser.add_argument("--log-level", default=None, help=f"loguru level (default: {settings.log_level})")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def configure_logging(level: str | None = None) -> None:
    logger.remove()
    logger.add(sys.stderr, level=(level or settings.log_level).upper())


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except SympairError as e:
        logger.debug(f"{type(e).__name__} in {args.command}")
        sys.stderr.write(f"sympair {args.command}: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(f"sympair {args.command}: {e}\n")
        return EXIT_USAGE
