import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from sympair.config import settings
from sympair.services.perm_core import Permutation


@pytest.fixture
def rng() -> random.Random:
    return random.Random(settings.random_seed)


@pytest.fixture
def small_bound(monkeypatch):
    monkeypatch.setattr(settings, "enumeration_bound", 4)


def permutations_of(n: int):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9).map(Fraction)
