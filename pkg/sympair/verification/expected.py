"""
Closed-form constants the identity checks compare against

Every constant is a function of the pair parameter n (group S_{n+1}) or of
the degree of S_n for the Young checks. `corrupt(name)` swaps one of them for
a deliberately wrong value so a verification run can prove it is able to
fail.
"""

from dataclasses import dataclass, fields, replace
from fractions import Fraction
from math import factorial
from typing import Callable

from ..exceptions import DomainError

Pair = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ExpectedConstants:
    # (|S_n|, |S_n tau S_n|)
    double_coset_sizes: Callable[[int], tuple[int, int]] = lambda n: (factorial(n), n * factorial(n))
    # chi# * chi# = a chi# + b chi#_id, returned as (a, b)
    lemma_square: Callable[[int], Pair] = lambda n: (Fraction(n - 1, n + 1), Fraction(n, n + 1))
    # chi#_id * chi# = c chi#
    cross_term: Callable[[int], Fraction] = lambda n: Fraction(1, n + 1)
    # chi#_id * chi#_id = c chi#_id
    identity_square: Callable[[int], Fraction] = lambda n: Fraction(1, n + 1)
    # c chi_{S_n} is the unit of the biinvariant algebra
    unit_scale: Callable[[int], Fraction] = lambda n: Fraction(n + 1)
    phi_transversal: Callable[[int], Fraction] = lambda n: Fraction(-1, n)
    cubic_roots: Callable[[int], tuple[Fraction, ...]] = lambda n: (Fraction(0), Fraction(1), Fraction(-1, n))
    phi_norm: Callable[[int], Fraction] = lambda n: Fraction(1, n)
    plancherel: Callable[[int], Pair] = lambda n: (Fraction(1), Fraction(n))
    # chi_s * chi_t = c chi_{st} on S_{n+1}
    point_product: Callable[[int], Fraction] = lambda n: Fraction(1, factorial(n + 1))
    # f_hat(1) = a f(Id) - b f(tau_12)
    ladder_level1: Pair = (Fraction(1, 2), Fraction(1, 2))
    # f_hat(2) = a (f(Id) + f(tau_12)) - b (four transversal terms)
    ladder_level2: Pair = (Fraction(1, 6), Fraction(1, 12))
    # lambda_t * dim O_t on S_m
    idempotency_product: Callable[[int], int] = lambda m: factorial(m)


EXPECTED = ExpectedConstants()

CORRUPTIONS: dict[str, object] = {
    "double_coset_sizes": lambda n: (factorial(n), n * factorial(n) + 1),
    "lemma_square": lambda n: (Fraction(n - 2, n + 1), Fraction(n, n + 1)),
    "cross_term": lambda n: Fraction(1, n + 2),
    "identity_square": lambda n: Fraction(1, n),
    "unit_scale": lambda n: Fraction(n),
    "phi_transversal": lambda n: Fraction(-1, n + 1),
    "cubic_roots": lambda n: (Fraction(0), Fraction(1), Fraction(-1, n + 1)),
    "phi_norm": lambda n: Fraction(1, n + 1),
    "plancherel": lambda n: (Fraction(1), Fraction(n + 1)),
    "point_product": lambda n: Fraction(1, factorial(n)),
    "ladder_level1": (Fraction(1, 2), Fraction(1, 3)),
    "ladder_level2": (Fraction(1, 6), Fraction(1, 6)),
    "idempotency_product": lambda m: factorial(m) + 1,
}


def constant_names() -> list[str]:
    return [f.name for f in fields(ExpectedConstants)]


def corrupt(name: str, base: ExpectedConstants = EXPECTED) -> ExpectedConstants:
    if name not in CORRUPTIONS:
        raise DomainError(f"unknown constant {name!r}; choose one of {', '.join(constant_names())}")
    return replace(base, **{name: CORRUPTIONS[name]})
