"""
Exact linear algebra over the rationals

Gaussian elimination on sparse Fraction vectors. No floating point anywhere,
so ranks and solutions are certain.
"""

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from loguru import logger

from ..exceptions import DomainError

SparseVector = dict[Hashable, Fraction]


class RowEchelon:
    """Incrementally maintained echelon basis of a span of sparse vectors"""

    def __init__(self):
        # pivot key -> reduced row whose pivot entry is 1
        self.rows: dict[Hashable, SparseVector] = {}
        self.order: list[Hashable] = []

    def reduce(self, vector: Mapping[Hashable, Fraction]) -> SparseVector:
        v = {k: Fraction(x) for k, x in vector.items() if x}
        for pivot in self.order:
            c = v.get(pivot)
            if not c:
                continue
            for k, x in self.rows[pivot].items():
                y = v.get(k, Fraction(0)) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def add(self, vector: Mapping[Hashable, Fraction]) -> bool:
        """Insert vector; True when it enlarged the span"""
        v = self.reduce(vector)
        if not v:
            return False
        pivot = min(v, key=_sort_key)
        scale = v[pivot]
        self.rows[pivot] = {k: x / scale for k, x in v.items()}
        self.order.append(pivot)
        return True

    def __contains__(self, vector: Mapping[Hashable, Fraction]) -> bool:
        return not self.reduce(vector)

    @property
    def rank(self) -> int:
        return len(self.order)


def _sort_key(key):
    # Keys are permutations or tabloids; repr gives a total, deterministic order
    return repr(key)


def rank(vectors: Iterable[Mapping[Hashable, Fraction]]) -> int:
    echelon = RowEchelon()
    for v in vectors:
        echelon.add(v)
    logger.debug(f"Exact rank computed: {echelon.rank}")
    return echelon.rank


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve A x = b for a square, full-rank A by Gauss-Jordan elimination"""
    size = len(matrix)
    if any(len(row) != size for row in matrix) or len(rhs) != size:
        raise DomainError("solve needs a square system")
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            raise DomainError("matrix is not full rank")
        a[col], a[pivot] = a[pivot], a[col]
        lead = a[col][col]
        a[col] = [x / lead for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]
