import argparse
import sys
from pathlib import Path

from ..config import settings

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2


def add_format_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=["text", "json"], default=None,
        help=f"report format (default: {settings.output_format})",
    )


def add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", type=Path, default=None, help="write to this file instead of stdout")


def output_format(args: argparse.Namespace) -> str:
    return args.format or settings.output_format


def emit(text: str, output: Path | None = None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")
