from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from conftest import permutations_of, rationals
from sympair.exceptions import DegreeMismatchError, DomainError
from sympair.services.gelfand import chi_basis, spherical_phi
from sympair.services.group_algebra import (
    AlgebraElement, check_involution, delta, essential_idempotency, fn_convolve,
    fn_convolve_pointwise, haar, inner_product, is_idempotent, measure_convolve, unit,
)
from sympair.services.perm_core import Permutation, compose, enumerate_group, identity, inverse
from sympair.services.sampling import random_element


def elements_of(n: int):
    return st.dictionaries(permutations_of(n), rationals, max_size=8).map(lambda d: AlgebraElement(n, d))


def test_zero_coefficients_are_not_stored():
    s = Permutation([2, 1, 3])
    element = AlgebraElement(3, {s: 0, identity(3): Fraction(1, 2)})
    assert element.support == [identity(3)]
    assert (element - element).is_zero()


def test_delta():
    assert len(delta(identity(3)).support) == 1
    s, t = Permutation([2, 1, 3]), Permutation([3, 1, 2])
    assert len((delta(s) + delta(t)).support) == 2
    total = AlgebraElement.zero(3)
    for x in enumerate_group(3):
        total = total + delta(x)
    assert total.scale(Fraction(1, 6)) == haar(3)


def test_measure_convolve_examples():
    s = Permutation([2, 3, 1, 4])
    assert measure_convolve(delta(s), delta(inverse(s))) == delta(identity(4))
    everything = AlgebraElement.constant(3)
    assert measure_convolve(everything, everything) == everything.scale(6)


def test_measure_convolve_double_sum(rng):
    a, b = random_element(rng, 4), random_element(rng, 4)
    product = measure_convolve(a, b)
    group = enumerate_group(4)
    for x in group:
        expected = sum((a[t] * b[u] for t in group for u in group if compose(t, u) == x), Fraction(0))
        assert product[x] == expected


def test_measure_convolve_mixed_denominators_and_cancellation():
    s, t = Permutation([2, 1, 3]), Permutation([1, 3, 2])
    a = AlgebraElement(3, {s: Fraction(2, 3), t: Fraction(-5, 4)})
    b = AlgebraElement(3, {identity(3): Fraction(7, 6), s: Fraction(-1, 9)})
    assert measure_convolve(a, b) == AlgebraElement(3, {
        s: Fraction(7, 9),
        identity(3): Fraction(-2, 27),
        t: Fraction(-35, 24),
        compose(t, s): Fraction(5, 36),
    })
    # (delta_s - delta_e)(delta_e + delta_s) = delta_s^2 - delta_e = 0 since s is an involution
    cancel = AlgebraElement(3, {s: 1, identity(3): -1})
    product = measure_convolve(cancel, AlgebraElement(3, {identity(3): 1, s: 1}))
    assert product.is_zero()
    assert measure_convolve(AlgebraElement.zero(3), a).is_zero()


def test_measure_convolve_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        measure_convolve(unit(3), unit(4))


@hypothesis_settings(max_examples=40, deadline=None, derandomize=True)
@given(a=elements_of(4), b=elements_of(4), c=elements_of(4))
def test_measure_convolve_is_associative_with_unit(a, b, c):
    assert measure_convolve(measure_convolve(a, b), c) == measure_convolve(a, measure_convolve(b, c))
    assert measure_convolve(unit(4), a) == a == measure_convolve(a, unit(4))


def test_fn_convolve_examples():
    one = AlgebraElement.constant(3)
    assert fn_convolve(one, one) == one
    basis = chi_basis(2)
    sub = basis.subgroup.to_element()
    f = basis.transversal.to_element().scale(3) + sub
    assert fn_convolve(sub, f) == f.scale(Fraction(1, 3))
    s, t = Permutation([2, 3, 1]), Permutation([1, 3, 2])
    assert fn_convolve(delta(s), delta(t)) == delta(compose(s, t)).scale(Fraction(1, 6))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_fn_convolve_matches_the_definition(rng, n):
    for _ in range(3):
        f, g = random_element(rng, n, density=0.6), random_element(rng, n, density=0.6)
        assert fn_convolve(f, g) == fn_convolve_pointwise(f, g)


def test_fn_convolve_matches_the_definition_on_s5(rng):
    f, g = random_element(rng, 5, density=0.1), random_element(rng, 5, density=0.1)
    assert fn_convolve(f, g) == fn_convolve_pointwise(f, g)


def test_haar():
    assert haar(1) == delta(identity(1))
    assert haar(4).total_mass == 1
    for n in range(2, 7):
        assert measure_convolve(haar(n), haar(n)) == haar(n)


def test_inner_product_examples():
    one = AlgebraElement.constant(3)
    assert inner_product(one, one) == 1
    phi = spherical_phi(2).to_element()
    assert inner_product(phi, phi) == Fraction(1, 2)
    trans = chi_basis(2).transversal.to_element()
    assert inner_product(trans, trans) == Fraction(2, 3)


@given(f=elements_of(4), g=elements_of(4))
def test_inner_product_is_symmetric_and_positive(f, g):
    assert inner_product(f, g) == inner_product(g, f)
    assert inner_product(f, f) >= 0
    assert (inner_product(f, f) == 0) == f.is_zero()


def test_check_involution(rng):
    s = Permutation([2, 3, 1])
    assert check_involution(delta(s)) == delta(inverse(s))
    f = random_element(rng, 4)
    assert check_involution(check_involution(f)) == f
    for n in (2, 3):
        phi = spherical_phi(n).to_element()
        assert check_involution(phi) == phi


def test_essential_idempotency():
    assert essential_idempotency(AlgebraElement.constant(3)) == 6
    assert essential_idempotency(unit(3)) == 1
    assert is_idempotent(unit(3))
    assert is_idempotent(haar(4))
    assert essential_idempotency(delta(Permutation([2, 3, 1]))) is None
    with pytest.raises(DomainError):
        essential_idempotency(AlgebraElement.zero(3))


def test_arithmetic():
    s = Permutation([2, 1, 3])
    a = AlgebraElement(3, {s: 1, identity(3): 2})
    assert (a + a) == a.scale(2) == 2 * a
    assert -a + a == AlgebraElement.zero(3)
    assert a.total_mass == 3
    assert a(s) == 1 and a[Permutation([3, 2, 1])] == 0
    assert AlgebraElement.indicator(3, [s]) == delta(s)
    with pytest.raises(DegreeMismatchError):
        a + unit(4)
