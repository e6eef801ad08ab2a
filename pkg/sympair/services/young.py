"""
Young tableaux, tabloids and polytabloids

Tableaux are stored row by row. A permutation p acts on a tableau by
replacing every entry v with p(v).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterable, Sequence

from loguru import logger

from ..exceptions import DegreeMismatchError, DomainError
from .group_algebra import AlgebraElement, delta, essential_idempotency, measure_convolve
from .linear_algebra import RowEchelon
from .perm_core import (
    Partition, Permutation, check_bound, compose, enumerate_group, inverse, signature,
)


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of the Young diagram of `shape` with 1..n"""
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise DomainError(f"rows {rows} do not have shape {self.shape}")
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, self.shape.weight + 1)):
            raise DomainError(f"filling {rows} is not a bijection onto 1..{self.shape.weight}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(Partition(tuple(len(r) for r in rows)), tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return self.shape.weight

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        width = self.shape.parts[0]
        return tuple(
            tuple(row[j] for row in self.rows if j < len(row)) for j in range(width)
        )

    def node(self, value: int) -> tuple[int, int]:
        """1-based (row, column) of the node holding value"""
        for i, row in enumerate(self.rows, start=1):
            if value in row:
                return i, row.index(value) + 1
        raise DomainError(f"{value} is not in the tableau")

    def __str__(self) -> str:
        return "\n".join("|" + "|".join(str(v) for v in row) + "|" for row in self.rows)


@dataclass(frozen=True)
class Tabloid:
    """Row-equivalence class of a tableau: row contents as sets"""
    rows: tuple[frozenset[int], ...]

    def __post_init__(self):
        rows = tuple(frozenset(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        sizes = [len(r) for r in rows]
        if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
            raise DomainError("tabloid row sizes must be weakly decreasing")
        union = set().union(*rows)
        if sum(sizes) != len(union) or union != set(range(1, len(union) + 1)):
            raise DomainError("tabloid rows must partition 1..n")

    def __repr__(self) -> str:
        return "{" + " | ".join(" ".join(str(x) for x in sorted(r)) for r in self.rows) + "}"


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..."""
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")

    def parts(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in parts(n, n)]


def superstandard_tableau(shape: Partition) -> Tableau:
    """Rows filled with 1..n in reading order"""
    rows, start = [], 1
    for length in shape.parts:
        rows.append(tuple(range(start, start + length)))
        start += length
    return Tableau(shape, tuple(rows))


def is_standard(t: Tableau) -> bool:
    rows_ok = all(list(r) == sorted(r) for r in t.rows)
    cols_ok = all(list(c) == sorted(c) for c in t.columns)
    return rows_ok and cols_ok


def standard_tableaux(shape: Partition) -> list[Tableau]:
    """Every filling with increasing rows and columns, in lexicographic order of rows"""
    n = shape.weight
    found = []

    def place(filling: list[list[int]], value: int):
        if value > n:
            found.append(Tableau(shape, tuple(tuple(r) for r in filling)))
            return
        for i, length in enumerate(shape.parts):
            j = len(filling[i])
            if j < length and (i == 0 or len(filling[i - 1]) > j):
                filling[i].append(value)
                place(filling, value + 1)
                filling[i].pop()

    place([[] for _ in shape.parts], 1)
    return sorted(found, key=lambda t: t.rows)


def _stabilizer(blocks: Iterable[Sequence[int]], n: int) -> list[Permutation]:
    blocks = [tuple(b) for b in blocks]
    result = []
    for images_per_block in product(*(permutations(b) for b in blocks)):
        images = list(range(1, n + 1))
        for block, image in zip(blocks, images_per_block):
            for src, dst in zip(block, image):
                images[src - 1] = dst
        result.append(Permutation._trusted(tuple(images)))
    return sorted(result)


def row_stabilizer(t: Tableau) -> list[Permutation]:
    """P_t: permutations keeping every row of t fixed setwise"""
    return _stabilizer(t.rows, t.n)


def column_stabilizer(t: Tableau) -> list[Permutation]:
    """Q_t: permutations keeping every column of t fixed setwise"""
    return _stabilizer(t.columns, t.n)


def young_subgroup(shape: Partition) -> list[Permutation]:
    """S_mu = S_{1..mu_1} x S_{mu_1+1..mu_1+mu_2} x ..."""
    return row_stabilizer(superstandard_tableau(shape))


def act_on_tableau(p: Permutation, t: Tableau) -> Tableau:
    if p.degree != t.n:
        raise DegreeMismatchError(f"permutation degree {p.degree} vs tableau weight {t.n}")
    return Tableau(t.shape, tuple(tuple(p(v) for v in row) for row in t.rows))


def tabloid_of(t: Tableau) -> Tabloid:
    return Tabloid(tuple(frozenset(row) for row in t.rows))


def act_on_tabloid(p: Permutation, tabloid: Tabloid) -> Tabloid:
    return Tabloid(tuple(frozenset(p(v) for v in row) for row in tabloid.rows))


def tabloids_of_shape(shape: Partition) -> list[Tabloid]:
    """The basis of M^mu: all distinct tabloids of the given shape"""
    check_bound(shape.weight)
    base = superstandard_tableau(shape)
    seen = {tabloid_of(act_on_tableau(p, base)) for p in enumerate_group(shape.weight)}
    return sorted(seen, key=repr)


def polytabloid(t: Tableau) -> AlgebraElement:
    """e_t = sum_{q in Q_t} sum_{p in P_t} eps(q) delta_p * delta_q"""
    coeffs: dict[Permutation, Fraction] = {}
    rows = row_stabilizer(t)
    for q in column_stabilizer(t):
        sign = signature(q)
        for p in rows:
            pq = compose(p, q)
            coeffs[pq] = coeffs.get(pq, Fraction(0)) + sign
    return AlgebraElement(t.n, coeffs)


def conjugate(p: Permutation, element: AlgebraElement) -> AlgebraElement:
    """delta_p * element * delta_{p^-1}"""
    return measure_convolve(measure_convolve(delta(p), element), delta(inverse(p)))


def specht_polytabloid(t: Tableau) -> dict[Tabloid, Fraction]:
    """The polytabloid in M^mu: sum_{q in Q_t} eps(q) {q t}"""
    vector: dict[Tabloid, Fraction] = {}
    for q in column_stabilizer(t):
        key = tabloid_of(act_on_tableau(q, t))
        vector[key] = vector.get(key, Fraction(0)) + signature(q)
    return {k: v for k, v in vector.items() if v}


def act_on_tabloid_vector(p: Permutation, vector: dict[Tabloid, Fraction]) -> dict[Tabloid, Fraction]:
    return {act_on_tabloid(p, k): v for k, v in vector.items()}


def ideal_dimension(shape: Partition, t: Tableau | None = None) -> int:
    """
    Dimension of the left ideal generated by e_t: the rank of
    {delta_pi * e_t : pi in S_n} over the rationals.
    """
    check_bound(shape.weight)
    t = t or superstandard_tableau(shape)
    if t.shape != shape:
        raise DomainError(f"tableau has shape {t.shape}, expected {shape}")
    e_t = polytabloid(t)
    echelon = RowEchelon()
    for pi in enumerate_group(shape.weight):
        echelon.add(measure_convolve(delta(pi), e_t).coeffs)
    logger.debug(f"Left ideal of shape {shape}: dimension {echelon.rank}")
    return echelon.rank


def specht_dimension(shape: Partition) -> int:
    """Rank of the span of {pi . e_t} inside M^mu"""
    check_bound(shape.weight)
    vector = specht_polytabloid(superstandard_tableau(shape))
    echelon = RowEchelon()
    for pi in enumerate_group(shape.weight):
        echelon.add(act_on_tabloid_vector(pi, vector))
    return echelon.rank


@lru_cache(maxsize=None)
def _tabloid_count(parts: tuple[int, ...]) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def tabloid_count(shape: Partition) -> int:
    """n! / prod mu_i!, the dimension of M^mu"""
    return _tabloid_count(shape.parts)


def primitive_idempotent(t: Tableau) -> AlgebraElement:
    """e_t / lambda_t"""
    e_t = polytabloid(t)
    factor = essential_idempotency(e_t)
    if factor is None:
        raise DomainError(f"polytabloid of {t.rows} is not essentially idempotent")
    return e_t.scale(1 / factor)
