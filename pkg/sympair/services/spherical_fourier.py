"""
Spherical Fourier transform of the pair (S_{n+1}, S_n)

The transform only sees the two double-coset averages of f:
    lambda_1 = average over S_n
    lambda_2 = average over S_n tau_{1,n+1} S_n
    f_hat(n) = <f, phi_n> = (lambda_1 - lambda_2) / (n + 1)
Exact inversion is therefore available for biinvariant data only.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from loguru import logger

from ..exceptions import DegreeMismatchError, DomainError
from .gelfand import (
    BiinvariantFn, DoubleCosetLabel, chi_basis, double_coset_of, double_coset_sizes,
    spherical_phi, trivial_spherical,
)
from .group_algebra import AlgebraElement, inner_product
from .linear_algebra import solve
from .perm_core import check_bound, compose, embed, enumerate_group, identity, transposition


@dataclass(frozen=True)
class SphericalCoefficients:
    n: int
    coef_trivial: Fraction  # <f, 1>
    coef_phi: Fraction      # <f, phi_n>


@dataclass(frozen=True)
class ChainLevel:
    k: int
    lambda1: Fraction
    lambda2: Fraction
    fhat: Fraction


@dataclass(frozen=True)
class ChainAverages:
    """Lambda_1, Lambda_2 and f_hat along S_2 < S_3 < ... < S_{N+1}"""
    max_level: int
    levels: tuple[ChainLevel, ...]

    def __post_init__(self):
        for level in self.levels:
            if level.fhat != (level.lambda1 - level.lambda2) / (level.k + 1):
                raise DomainError(f"inconsistent chain level {level.k}")

    def level(self, k: int) -> ChainLevel:
        return self.levels[k - 1]

    @property
    def lambda1(self) -> list[Fraction]:
        return [lv.lambda1 for lv in self.levels]

    @property
    def lambda2(self) -> list[Fraction]:
        return [lv.lambda2 for lv in self.levels]

    @property
    def fhat(self) -> list[Fraction]:
        return [lv.fhat for lv in self.levels]


def _check_degree(f: AlgebraElement, n: int) -> None:
    if n < 1 or f.degree != n + 1:
        raise DegreeMismatchError(f"expected a function on S_{n + 1}, got degree {f.degree}")


def lambda_averages(f: AlgebraElement, n: int) -> tuple[Fraction, Fraction]:
    _check_degree(f, n)
    sums = {DoubleCosetLabel.SUBGROUP: Fraction(0), DoubleCosetLabel.TRANSVERSAL: Fraction(0)}
    for s, v in f.coeffs.items():
        sums[double_coset_of(s)] += v
    sizes = double_coset_sizes(n)
    return (
        sums[DoubleCosetLabel.SUBGROUP] / sizes[DoubleCosetLabel.SUBGROUP],
        sums[DoubleCosetLabel.TRANSVERSAL] / sizes[DoubleCosetLabel.TRANSVERSAL],
    )


def spherical_transform(f: AlgebraElement, n: int) -> Fraction:
    lambda1, lambda2 = lambda_averages(f, n)
    return (lambda1 - lambda2) / (n + 1)


def transform_pair(f: AlgebraElement, n: int) -> SphericalCoefficients:
    lambda1, lambda2 = lambda_averages(f, n)
    return SphericalCoefficients(
        n=n,
        # <f, 1> = (n! lambda_1 + n n! lambda_2) / (n+1)!
        coef_trivial=(lambda1 + n * lambda2) / (n + 1),
        coef_phi=(lambda1 - lambda2) / (n + 1),
    )


@lru_cache(maxsize=None)
def plancherel_weights(n: int) -> tuple[Fraction, Fraction]:
    """
    Weights (w_1, w_phi) with f = w_1 <f,1> 1 + w_phi <f,phi_n> phi_n on
    biinvariant f, fixed by reconstructing chi#_{id} exactly.
    """
    target = chi_basis(n).subgroup.to_element()
    one, phi = trivial_spherical(n), spherical_phi(n)
    c_one, c_phi = inner_product(target, one.to_element()), inner_product(target, phi.to_element())
    matrix = [
        [c_one * one.value_on_subgroup, c_phi * phi.value_on_subgroup],
        [c_one * one.value_on_transversal, c_phi * phi.value_on_transversal],
    ]
    w_one, w_phi = solve(matrix, [Fraction(1), Fraction(0)])
    logger.debug(f"Plancherel weights for n={n}: ({w_one}, {w_phi})")
    return w_one, w_phi


def invert_biinvariant(c: SphericalCoefficients) -> BiinvariantFn:
    """f# = <f,1> 1 + n <f,phi_n> phi_n"""
    w_one, w_phi = plancherel_weights(c.n)
    return (
        (w_one * c.coef_trivial) * trivial_spherical(c.n)
        + (w_phi * c.coef_phi) * spherical_phi(c.n)
    )


def restrict_to_level(f: AlgebraElement, k: int) -> AlgebraElement:
    """f evaluated on S_{k+1} embedded in S_{N+1} (points above k+1 fixed)"""
    top = f.degree
    if not 1 <= k < top:
        raise DomainError(f"level {k} outside 1..{top - 1}")
    return AlgebraElement(k + 1, {s: f[embed(s, top)] for s in enumerate_group(k + 1)})


def chain_transform(f: AlgebraElement, N: int) -> ChainAverages:
    _check_degree(f, N)
    check_bound(N + 1)
    levels = []
    for k in range(1, N + 1):
        lambda1, lambda2 = lambda_averages(restrict_to_level(f, k), k)
        levels.append(ChainLevel(k, lambda1, lambda2, (lambda1 - lambda2) / (k + 1)))
    return ChainAverages(N, tuple(levels))


def ladder_level_formula(f: AlgebraElement, k: int) -> Fraction:
    """Closed expansions of f_hat(1) and f_hat(2) written out term by term"""
    m = f.degree
    t = lambda i, j: transposition(i, j, m)
    e = identity(m)
    if k == 1:
        return Fraction(1, 2) * f[e] - Fraction(1, 2) * f[t(1, 2)]
    if k == 2:
        if m < 3:
            raise DomainError("level 2 needs degree at least 3")
        head = Fraction(1, factorial(3)) * (f[e] + f[t(1, 2)])
        tail = (
            f[t(1, 3)]
            + f[compose(t(1, 3), t(1, 2))]
            + f[compose(t(1, 2), t(1, 3))]
            + f[t(2, 3)]
        )
        return head - Fraction(1, 2 * factorial(3)) * tail
    raise DomainError(f"closed expansion only available for levels 1 and 2, got {k}")


def truncated_inversion_residual(f: AlgebraElement) -> Fraction:
    """
    Difference between the truncated recovery expression for f(Id) and f(Id).

    expression = (1/n) sum_{k=1..n} (1+k)! f_hat(k)
                 - (1/n) sum_{k=2..n} (n-k) f(tau_{1,k})
                 - (1/n^2) f(tau_{1,n+1})
    Diagnostic only: the expression is truncated and recovers nothing by itself.
    """
    n = f.degree - 1
    if n < 1:
        raise DomainError("the recovery expression needs degree at least 2")
    m = f.degree
    fhat = chain_transform(f, n).fhat
    first = sum((factorial(1 + k) * fhat[k - 1] for k in range(1, n + 1)), Fraction(0)) / n
    second = sum((Fraction(n - k) * f[transposition(1, k, m)] for k in range(2, n + 1)), Fraction(0)) / n
    third = f[transposition(1, n + 1, m)] / (n * n)
    return first - second - third - f[identity(m)]


def residual_table(functions: Sequence[tuple[str, AlgebraElement]]) -> list[tuple[str, Fraction]]:
    return [(label, truncated_inversion_residual(f)) for label, f in functions]
