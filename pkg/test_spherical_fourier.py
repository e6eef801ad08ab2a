from fractions import Fraction
from math import factorial

import pytest

from sympair.exceptions import DegreeMismatchError, DomainError
from sympair.services.gelfand import biinvariant_project, chi_basis, spherical_phi, trivial_spherical
from sympair.services.group_algebra import AlgebraElement, delta, inner_product
from sympair.services.perm_core import compose, identity, transposition
from sympair.services.sampling import random_biinvariant, random_element
from sympair.services.spherical_fourier import (
    ChainAverages, ChainLevel, SphericalCoefficients, chain_transform, invert_biinvariant,
    ladder_level_formula, lambda_averages, plancherel_weights, residual_table,
    restrict_to_level, spherical_transform, transform_pair, truncated_inversion_residual,
)


def test_lambda_averages_examples():
    basis = chi_basis(3)
    assert lambda_averages(AlgebraElement.constant(4), 3) == (1, 1)
    assert lambda_averages(basis.subgroup.to_element(), 3) == (1, 0)
    assert lambda_averages(basis.transversal.to_element(), 3) == (0, 1)
    with pytest.raises(DegreeMismatchError):
        lambda_averages(AlgebraElement.constant(4), 2)


def test_spherical_transform_examples():
    basis = chi_basis(2)
    assert spherical_transform(AlgebraElement.constant(3), 2) == 0
    assert spherical_transform(basis.subgroup.to_element(), 2) == Fraction(1, 3)
    assert spherical_transform(basis.transversal.to_element(), 2) == Fraction(-1, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_transform_is_the_inner_product_with_phi(rng, n):
    phi = spherical_phi(n).to_element()
    one = AlgebraElement.constant(n + 1)
    for _ in range(10):
        f = random_element(rng, n + 1)
        coefficients = transform_pair(f, n)
        assert coefficients.coef_phi == spherical_transform(f, n) == inner_product(f, phi)
        assert coefficients.coef_trivial == inner_product(f, one)


def test_transform_pair_examples():
    assert transform_pair(AlgebraElement.constant(3), 2) == SphericalCoefficients(2, Fraction(1), Fraction(0))
    rescaled = delta(identity(3)).scale(factorial(3))
    assert transform_pair(rescaled, 2) == SphericalCoefficients(2, Fraction(1), Fraction(1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_transform_only_sees_the_projection(rng, n):
    for _ in range(5):
        f = random_element(rng, n + 1)
        assert transform_pair(f, n) == transform_pair(biinvariant_project(f), n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_plancherel_weights(n):
    assert plancherel_weights(n) == (1, n)


def test_inversion_examples():
    assert invert_biinvariant(SphericalCoefficients(3, Fraction(1), Fraction(0))) == trivial_spherical(3)
    for n in range(2, 6):
        c = SphericalCoefficients(n, Fraction(1, n + 1), Fraction(1, n + 1))
        assert invert_biinvariant(c) == chi_basis(n).subgroup


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_round_trips_are_exact(rng, n):
    for _ in range(100):
        f = random_biinvariant(rng, n)
        c = transform_pair(f.to_element(), n)
        assert invert_biinvariant(c) == f
        assert transform_pair(invert_biinvariant(c).to_element(), n) == c


def test_restrict_to_level():
    f = AlgebraElement.from_function(4, lambda s: s(4))
    restricted = restrict_to_level(f, 2)
    assert restricted.degree == 3
    assert set(restricted.coeffs.values()) == {Fraction(4)}
    with pytest.raises(DomainError):
        restrict_to_level(f, 4)


def test_chain_transform_examples():
    chain = chain_transform(AlgebraElement.constant(4), 3)
    assert chain.fhat == [0, 0, 0]
    f = AlgebraElement(4, {identity(4): 1})
    assert chain_transform(f, 3).fhat[0] == Fraction(1, 2)


def test_chain_average_consistency_is_enforced():
    with pytest.raises(DomainError):
        ChainAverages(1, (ChainLevel(1, Fraction(1), Fraction(0), Fraction(1)),))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ladder_levels_match_the_closed_expansions(rng, n):
    m = n + 1
    t = lambda i, j: transposition(i, j, m)
    for _ in range(10):
        f = random_element(rng, m)
        chain = chain_transform(f, n)
        e = identity(m)
        assert chain.fhat[0] == Fraction(1, 2) * f[e] - Fraction(1, 2) * f[t(1, 2)] == ladder_level_formula(f, 1)
        tail = f[t(1, 3)] + f[compose(t(1, 3), t(1, 2))] + f[compose(t(1, 2), t(1, 3))] + f[t(2, 3)]
        expected = Fraction(1, 6) * (f[e] + f[t(1, 2)]) - Fraction(1, 12) * tail
        assert chain.fhat[1] == expected == ladder_level_formula(f, 2)
        assert chain.fhat[-1] == spherical_transform(f, n)


def test_ladder_formula_domain():
    with pytest.raises(DomainError):
        ladder_level_formula(AlgebraElement.constant(4), 3)
    with pytest.raises(DomainError):
        ladder_level_formula(AlgebraElement.constant(2), 2)


def test_residuals_are_reported(rng):
    one, unit_mass = AlgebraElement.constant(4), delta(identity(4))
    rows = residual_table([("one", one), ("delta_id", unit_mass), ("random", random_element(rng, 4))])
    assert [label for label, _ in rows] == ["one", "delta_id", "random"]
    assert all(isinstance(value, Fraction) for _, value in rows)
    # f_hat vanishes on constants so only the transposition terms and f(Id) remain
    assert truncated_inversion_residual(one) == Fraction(-1, 3) - Fraction(1, 9) - 1
