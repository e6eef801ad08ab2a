"""Seeded random rational inputs for identity checks"""

import random
from fractions import Fraction

from ..config import settings
from .gelfand import BiinvariantFn, coset_label
from .group_algebra import AlgebraElement
from .perm_core import enumerate_group


def make_rng(seed: int | None = None) -> random.Random:
    return random.Random(settings.random_seed if seed is None else seed)


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_element(rng: random.Random, degree: int, density: float = 1.0) -> AlgebraElement:
    """A rational function on S_degree; each point is kept with probability density"""
    return AlgebraElement(
        degree,
        {s: random_rational(rng) for s in enumerate_group(degree) if rng.random() < density},
    )


def random_biinvariant(rng: random.Random, n: int) -> BiinvariantFn:
    return BiinvariantFn(n, random_rational(rng), random_rational(rng))


def random_right_invariant(rng: random.Random, n: int) -> AlgebraElement:
    """Constant on every right coset s S_n of S_{n+1}"""
    per_coset = {label: random_rational(rng) for label in range(1, n + 2)}
    return AlgebraElement.from_function(n + 1, lambda s: per_coset[coset_label(s)])


def random_nonnegative(rng: random.Random, degree: int) -> AlgebraElement:
    return AlgebraElement(
        degree, {s: Fraction(rng.randint(0, 9), rng.randint(1, 9)) for s in enumerate_group(degree)}
    )
