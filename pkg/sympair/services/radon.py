"""
Radon transforms

Group side (exact): the horocyclic transform on S_{n+1} averages f over each
right coset s S_n.

N* side (double precision): the divisor transform Rf(m) = sum_k f(km),
truncated at the table bound N, and its Moebius inversion
f(n) = sum_k mu(k) Rf(nk). With the same truncation on both sides the round
trip telescopes to f exactly (up to float rounding).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

import numpy as np
from loguru import logger
from sympy import factorint

from ..exceptions import DegreeMismatchError, DomainError
from .gelfand import coset_label, coset_representative
from .group_algebra import AlgebraElement
from .perm_core import enumerate_group


@dataclass(frozen=True)
class ArithmeticFn:
    """f(1..N) as a float64 table; values[k-1] = f(k)"""
    values: np.ndarray
    decay_exponent: float | None = field(default=None)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size < 1:
            raise DomainError("an arithmetic function needs a one-dimensional table with N >= 1")
        if not np.all(np.isfinite(values)):
            raise DomainError("arithmetic function values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values, decay_exponent: float | None = None) -> "ArithmeticFn":
        return cls(np.asarray(values, dtype=np.float64), decay_exponent)

    @classmethod
    def from_callable(cls, fn: Callable[[int], float], N: int, decay_exponent: float | None = None) -> "ArithmeticFn":
        return cls(np.array([fn(k) for k in range(1, N + 1)], dtype=np.float64), decay_exponent)

    @property
    def N(self) -> int:
        return int(self.values.size)

    def __call__(self, k: int) -> float:
        if not 1 <= k <= self.N:
            raise DomainError(f"index {k} outside 1..{self.N}")
        return float(self.values[k - 1])

    def decay_constant(self, exponent: float | None = None) -> float:
        """Smallest c with |f(k)| <= c k^-s on the table"""
        s = exponent if exponent is not None else self.decay_exponent
        if s is None:
            raise DomainError("no decay exponent given")
        k = np.arange(1, self.N + 1, dtype=np.float64)
        return float(np.max(np.abs(self.values) * k ** s))

    def tail_bound(self, m: int, exponent: float | None = None) -> float:
        """c N^(-1-eps) / m for |f(k)| < c k^(-2-eps)"""
        s = exponent if exponent is not None else self.decay_exponent
        if s is None or s <= 2:
            raise DomainError("tail bound needs a decay exponent s = 2 + eps > 2")
        return self.decay_constant(s) * self.N ** (1 - s) / m


def horocyclic_radon(f: AlgebraElement, n: int, normalized: bool = True) -> AlgebraElement:
    """
    Rf(s) = (1/n!) sum_{h in S_n} f(s h).

    With normalized=False the plain coset sum is returned instead.
    """
    if n < 1 or f.degree != n + 1:
        raise DegreeMismatchError(f"expected a function on S_{n + 1}, got degree {f.degree}")
    per_coset = radon_on_cosets(f, n)
    scale = Fraction(1) if normalized else Fraction(factorial(n))
    return AlgebraElement(
        n + 1, {s: scale * per_coset[coset_label(s)] for s in enumerate_group(n + 1)}
    )


def radon_on_cosets(f: AlgebraElement, n: int) -> dict[int, Fraction]:
    """Rf as a function on S_{n+1}/S_n = Z_{n+1}: coset label -> average"""
    if n < 1 or f.degree != n + 1:
        raise DegreeMismatchError(f"expected a function on S_{n + 1}, got degree {f.degree}")
    sums = {label: Fraction(0) for label in range(1, n + 2)}
    for s, v in f.coeffs.items():
        sums[coset_label(s)] += v
    weight = Fraction(1, factorial(n))
    return {label: weight * total for label, total in sums.items()}


def coset_table(f: AlgebraElement, n: int) -> list[tuple[int, str, Fraction]]:
    """(label, representative tau_{label,n+1}, Rf) rows in label order"""
    per_coset = radon_on_cosets(f, n)
    return [
        (label, str(coset_representative(label, n)), value)
        for label, value in sorted(per_coset.items())
    ]


def _check_index(m: int, N: int) -> None:
    if not 1 <= m <= N:
        raise DomainError(f"index {m} outside 1..{N}")


def coset_radon(f: ArithmeticFn, m: int, N: int | None = None) -> float:
    """sum_{k: km <= N} f(km), reading A < B as divisibility on N*"""
    N = f.N if N is None else N
    if N > f.N:
        raise DomainError(f"truncation {N} exceeds table size {f.N}")
    _check_index(m, N)
    # Fixed summation order: f(m), f(2m), ...
    return float(np.sum(f.values[m - 1:N:m]))


def divisor_radon_table(f: ArithmeticFn) -> ArithmeticFn:
    """Rf(1..N) under the table's own truncation"""
    return ArithmeticFn(
        np.array([coset_radon(f, m) for m in range(1, f.N + 1)], dtype=np.float64),
        f.decay_exponent,
    )


@lru_cache(maxsize=None)
def mobius(k: int) -> int:
    """(-1)^r for k squarefree with r distinct primes, else 0"""
    if k < 1:
        raise DomainError(f"Moebius function is defined for k >= 1, got {k}")
    exponents = factorint(k)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=8)
def mobius_table(N: int) -> np.ndarray:
    """mu(1..N) as an int8 array"""
    table = np.array([mobius(k) for k in range(1, N + 1)], dtype=np.int8)
    table.setflags(write=False)
    logger.debug(f"Moebius table computed up to {N}")
    return table


def mobius_invert(rf: ArithmeticFn, n: int, N: int | None = None) -> float:
    """sum_{k: nk <= N} mu(k) Rf(nk)"""
    N = rf.N if N is None else N
    if N > rf.N:
        raise DomainError(f"truncation {N} exceeds table size {rf.N}")
    _check_index(n, N)
    terms = rf.values[n - 1:N:n]
    mu = mobius_table(len(terms)).astype(np.float64)
    return float(np.sum(mu * terms))


def mobius_invert_table(rf: ArithmeticFn, count: int | None = None) -> ArithmeticFn:
    count = rf.N if count is None else count
    _check_index(count, rf.N)
    return ArithmeticFn(
        np.array([mobius_invert(rf, n) for n in range(1, count + 1)], dtype=np.float64),
        rf.decay_exponent,
    )
