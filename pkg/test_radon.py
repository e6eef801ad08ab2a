from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from sympy import zeta

from sympair.exceptions import DegreeMismatchError, DomainError
from sympair.services.gelfand import chi_basis
from sympair.services.group_algebra import AlgebraElement, delta, fn_convolve
from sympair.services.perm_core import compose, embed, enumerate_group, identity
from sympair.services.radon import (
    ArithmeticFn, coset_radon, coset_table, divisor_radon_table, horocyclic_radon, mobius,
    mobius_invert, mobius_invert_table, mobius_table, radon_on_cosets,
)
from sympair.services.sampling import random_element
from sympair.services.spherical_fourier import lambda_averages


def test_horocyclic_examples():
    one = AlgebraElement.constant(3)
    assert horocyclic_radon(one, 2) == one
    rf = horocyclic_radon(delta(identity(3)), 2)
    assert rf == AlgebraElement.from_function(3, lambda s: Fraction(1, 2) if s(3) == 3 else 0)
    assert horocyclic_radon(one, 2, normalized=False) == one.scale(2)
    with pytest.raises(DegreeMismatchError):
        horocyclic_radon(one, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_radon_is_constant_on_cosets(rng, n):
    f = random_element(rng, n + 1)
    rf = horocyclic_radon(f, n)
    for s in enumerate_group(n + 1):
        for h in enumerate_group(n):
            assert rf[compose(s, embed(h, n + 1))] == rf[s]
    assert rf[identity(n + 1)] == lambda_averages(f, n)[0]
    assert horocyclic_radon(rf, n) == rf


@pytest.mark.parametrize("n", [2, 3, 4])
def test_radon_is_convolution_with_the_subgroup_indicator(rng, n):
    kernel = chi_basis(n).subgroup.to_element().scale(n + 1)
    for _ in range(3):
        f = random_element(rng, n + 1)
        assert horocyclic_radon(f, n) == fn_convolve(f, kernel)


def test_coset_table():
    f = AlgebraElement.from_function(4, lambda s: s(4))
    per_coset = radon_on_cosets(f, 3)
    assert per_coset == {1: 1, 2: 2, 3: 3, 4: 4}
    rows = coset_table(f, 3)
    assert [label for label, _, _ in rows] == [1, 2, 3, 4]
    assert rows[-1] == (4, "1 2 3 4", Fraction(4))
    assert rows[0][1] == "4 2 3 1"


def test_mobius_values():
    assert [mobius(k) for k in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert mobius(30) == -1
    with pytest.raises(DomainError):
        mobius(0)
    table = mobius_table(12)
    assert table.tolist() == [mobius(k) for k in range(1, 13)]
    assert not table.flags.writeable


def test_mobius_sums_over_divisors():
    for k in range(1, 200):
        total = sum(mobius(d) for d in range(1, k + 1) if k % d == 0)
        assert total == (1 if k == 1 else 0)


def test_arithmetic_fn():
    f = ArithmeticFn.from_callable(lambda k: 1.0 / k, 5)
    assert f.N == 5
    assert f(2) == 0.5
    assert not f.values.flags.writeable
    with pytest.raises(DomainError):
        f(6)
    with pytest.raises(DomainError):
        ArithmeticFn.from_values([])
    with pytest.raises(DomainError):
        ArithmeticFn.from_values([1.0, float("nan")])


def test_coset_radon_examples():
    ones = ArithmeticFn.from_values(np.ones(10))
    assert [coset_radon(ones, m) for m in range(1, 11)] == [10 // m for m in range(1, 11)]
    assert coset_radon(ones, 3, N=6) == 2
    with pytest.raises(DomainError):
        coset_radon(ones, 11)
    with pytest.raises(DomainError):
        coset_radon(ones, 1, N=20)


def test_radon_of_the_indicator_of_one():
    indicator = ArithmeticFn.from_values([1.0] + [0.0] * 29)
    rf = divisor_radon_table(indicator)
    assert rf(1) == 1
    assert all(rf(m) == 0 for m in range(2, 31))
    assert mobius_invert(rf, 1) == 1


@pytest.mark.parametrize("m", [1, 2, 3, 7])
def test_radon_at_m_is_radon_at_one_of_the_dilation(m):
    f = ArithmeticFn.from_callable(lambda k: (-1) ** k / k ** 2, 60)
    dilated = ArithmeticFn.from_values([f(k * m) for k in range(1, f.N // m + 1)])
    assert coset_radon(f, m) == pytest.approx(coset_radon(dilated, 1), abs=1e-15)


def test_cube_reciprocals_sum_to_zeta_three():
    f = ArithmeticFn.from_callable(lambda k: k ** -3.0, 10_000, decay_exponent=3.0)
    assert coset_radon(f, 1) == pytest.approx(float(zeta(3)), abs=1e-6)
    assert coset_radon(f, 2) == pytest.approx(float(zeta(3)) / 8, abs=1e-6)


def test_finite_support_round_trip_is_exact():
    values = np.zeros(400)
    values[:20] = np.arange(1, 21) % 7 - 3.0
    f = ArithmeticFn.from_values(values)
    recovered = mobius_invert_table(divisor_radon_table(f))
    np.testing.assert_allclose(recovered.values, f.values, atol=1e-12)


def test_decaying_round_trip():
    f = ArithmeticFn.from_callable(lambda k: (-1) ** k / k ** 2.5, 2000, decay_exponent=2.5)
    rf = divisor_radon_table(f)
    assert rf.decay_exponent == 2.5
    for n in range(1, 11):
        assert mobius_invert(rf, n) == pytest.approx(f(n), abs=1e-9)
    assert mobius_invert_table(rf, 10).N == 10


def test_tail_bound():
    f = ArithmeticFn.from_callable(lambda k: k ** -3.0, 100, decay_exponent=3.0)
    assert f.decay_constant() == pytest.approx(1.0)
    assert f.tail_bound(1) == pytest.approx(1e-4)
    assert f.tail_bound(4) == pytest.approx(2.5e-5)
    with pytest.raises(DomainError):
        f.tail_bound(1, exponent=2.0)
    with pytest.raises(DomainError):
        ArithmeticFn.from_values([1.0]).decay_constant()


def test_group_radon_unnormalized_sum(rng):
    f = random_element(rng, 4)
    assert horocyclic_radon(f, 3, normalized=False) == horocyclic_radon(f, 3).scale(factorial(3))
