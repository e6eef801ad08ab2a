"""
Text formats for functions on S_n and on N*

Function file:
    degree 3
    1 2 3  1/2
    2 1 3  -4
Lines starting with '#' and blank lines are ignored. Omitted permutations
carry the value 0. Printing gives the canonical form: support in
lexicographic order, values in lowest terms.

Arithmetic file: one "index value" pair per line, 1-indexed, missing
indices are 0.
"""

from fractions import Fraction
from pathlib import Path
from typing import Iterable

import numpy as np

from ..exceptions import FunctionFileError, InvalidPermutationError
from .group_algebra import AlgebraElement
from .perm_core import Permutation, format_permutation
from .radon import ArithmeticFn


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _parse_value(token: str, number: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as e:
        raise FunctionFileError(f"invalid value {token!r}", number) from e


def format_value(value: Fraction) -> str:
    # str(Fraction) is already "p" or "p/q" in lowest terms
    return str(Fraction(value))


def parse_function(text: str) -> AlgebraElement:
    lines = list(_content_lines(text))
    if not lines:
        raise FunctionFileError("missing 'degree N' header", 1)
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "degree":
        raise FunctionFileError(f"expected 'degree N', got {header!r}", number)
    try:
        degree = int(parts[1])
    except ValueError as e:
        raise FunctionFileError(f"degree must be an integer, got {parts[1]!r}", number) from e
    if degree < 1:
        raise FunctionFileError(f"degree must be at least 1, got {degree}", number)

    coeffs: dict[Permutation, Fraction] = {}
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != degree + 1:
            raise FunctionFileError(
                f"expected {degree} images and a value, got {len(tokens)} fields", number
            )
        try:
            perm = Permutation(int(tok) for tok in tokens[:degree])
        except (ValueError, InvalidPermutationError) as e:
            raise FunctionFileError(f"invalid permutation {' '.join(tokens[:degree])!r}", number) from e
        if perm in coeffs:
            raise FunctionFileError(f"duplicate permutation {format_permutation(perm)}", number)
        coeffs[perm] = _parse_value(tokens[-1], number)
    return AlgebraElement(degree, coeffs)


def format_function(f: AlgebraElement) -> str:
    lines = [f"degree {f.degree}"]
    lines.extend(f"{format_permutation(s)} {format_value(v)}" for s, v in f.items())
    return "\n".join(lines) + "\n"


def read_function(path: str | Path) -> AlgebraElement:
    return parse_function(Path(path).read_text(encoding="utf-8"))


def write_function(path: str | Path, f: AlgebraElement) -> None:
    Path(path).write_text(format_function(f), encoding="utf-8")


def parse_arithmetic(text: str, N: int | None = None, decay_exponent: float | None = None) -> ArithmeticFn:
    """Table of f(1..N); N defaults to the largest index present"""
    entries: dict[int, float] = {}
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise FunctionFileError(f"expected 'index value', got {line!r}", number)
        try:
            index = int(tokens[0])
        except ValueError as e:
            raise FunctionFileError(f"index must be an integer, got {tokens[0]!r}", number) from e
        if index < 1:
            raise FunctionFileError(f"indices start at 1, got {index}", number)
        if index in entries:
            raise FunctionFileError(f"duplicate index {index}", number)
        entries[index] = float(_parse_value(tokens[1], number))
    if not entries:
        raise FunctionFileError("no entries")
    size = N if N is not None else max(entries)
    if size < max(entries):
        raise FunctionFileError(f"index {max(entries)} beyond truncation {size}")
    values = np.zeros(size, dtype=np.float64)
    for index, value in entries.items():
        values[index - 1] = value
    return ArithmeticFn(values, decay_exponent)


def format_arithmetic(f: ArithmeticFn, count: int | None = None) -> str:
    count = f.N if count is None else min(count, f.N)
    return "".join(f"{k} {float(f.values[k - 1])!r}\n" for k in range(1, count + 1))


def read_arithmetic(path: str | Path, N: int | None = None, decay_exponent: float | None = None) -> ArithmeticFn:
    return parse_arithmetic(Path(path).read_text(encoding="utf-8"), N, decay_exponent)
