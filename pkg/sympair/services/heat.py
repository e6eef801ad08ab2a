"""
Discrete heat equation on S_{n+1}

    f_k(x) = (1/n!) sum_{h in S_n} f_{k-1}(x h),   i.e. f_k = f_{k-1} * nu

with nu the Haar measure of S_n embedded in S_{n+1}. Since nu * nu = nu the
evolution stops after the first step: f_k = f_0 * nu for every k >= 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from loguru import logger

from ..exceptions import DegreeMismatchError, DomainError
from .group_algebra import AlgebraElement, measure_convolve
from .perm_core import check_bound, embed, enumerate_group
from .radon import horocyclic_radon


@dataclass(frozen=True)
class HeatState:
    step: int
    state: AlgebraElement

    def __post_init__(self):
        if self.step < 0:
            raise DomainError(f"heat step must be non-negative, got {self.step}")
        if self.state.degree < 2:
            raise DomainError("heat evolution needs a function on S_(n+1) with n >= 1")

    @property
    def n(self) -> int:
        return self.state.degree - 1


@lru_cache(maxsize=None)
def embedded_haar(n: int) -> AlgebraElement:
    """nu: weight 1/n! on every s in S_n, viewed inside S_{n+1}"""
    check_bound(n + 1)
    weight = Fraction(1, factorial(n))
    return AlgebraElement._trusted(n + 1, {embed(s, n + 1): weight for s in enumerate_group(n)})


def _check_degree(f: AlgebraElement, n: int) -> None:
    if n < 1 or f.degree != n + 1:
        raise DegreeMismatchError(f"expected a function on S_{n + 1}, got degree {f.degree}")


def sub_laplacian(f: AlgebraElement, n: int) -> AlgebraElement:
    """Delta f = f * nu - f"""
    _check_degree(f, n)
    return measure_convolve(f, embedded_haar(n)) - f


def heat_step(state: HeatState) -> HeatState:
    return HeatState(state.step + 1, measure_convolve(state.state, embedded_haar(state.n)))


def heat_iterate(f0: AlgebraElement, k: int, n: int) -> AlgebraElement:
    """k explicit applications of heat_step"""
    _check_degree(f0, n)
    if k < 0:
        raise DomainError(f"time must be non-negative, got {k}")
    state = HeatState(0, f0)
    for _ in range(k):
        state = heat_step(state)
    return state.state


def heat_solve(f0: AlgebraElement, k: int, n: int) -> AlgebraElement:
    """f_0 for k = 0, f_0 * nu for every k >= 1"""
    _check_degree(f0, n)
    if k < 0:
        raise DomainError(f"time must be non-negative, got {k}")
    if k == 0:
        return f0
    logger.debug(f"heat_solve on S_{n + 1}: collapsing {k} steps to one convolution")
    return measure_convolve(f0, embedded_haar(n))


def radon_of_solution(f0: AlgebraElement, k: int, n: int) -> AlgebraElement:
    return horocyclic_radon(heat_solve(f0, k, n), n)
