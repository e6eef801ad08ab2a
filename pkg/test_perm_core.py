from math import factorial

import pytest
from hypothesis import given
from sympy.combinatorics import Permutation as SympyPermutation

from conftest import permutations_of
from sympair.exceptions import (
    DegreeMismatchError, DomainError, EnumerationBoundError, InvalidPartitionError, InvalidPermutationError,
)
from sympair.services.perm_core import (
    Partition, Permutation, compose, conjugacy_classes, cycle_decompose, cycle_restriction,
    cycle_type, embed, enumerate_group, format_permutation, identity, inverse, is_circular,
    parse_permutation, signature, transposition,
)
from sympair.services.young import partitions_of


def test_compose_convention():
    assert compose(identity(3), Permutation([2, 3, 1])) == Permutation([2, 3, 1])
    assert compose(transposition(1, 3, 3), transposition(1, 2, 3)) == Permutation([2, 3, 1])
    assert Permutation([2, 3, 1]) * Permutation([1, 3, 2]) == compose(Permutation([2, 3, 1]), Permutation([1, 3, 2]))


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(3), identity(4))


def test_inverse_on_random_degree_six(rng):
    group = enumerate_group(6)
    for _ in range(50):
        s = rng.choice(group)
        assert compose(s, inverse(s)) == identity(6)
        assert compose(inverse(s), s) == identity(6)


@pytest.mark.parametrize("images", [[], [1, 1], [0, 1], [2, 3]])
def test_invalid_permutations(images):
    with pytest.raises(InvalidPermutationError):
        Permutation(images)


def test_permutation_is_immutable():
    s = identity(3)
    with pytest.raises(AttributeError):
        s.images = (2, 1, 3)


@pytest.mark.parametrize("parts", [(), (1, 2), (2, 0), (3, -1)])
def test_invalid_partitions(parts):
    with pytest.raises(InvalidPartitionError):
        Partition(parts)


def test_signature_examples():
    assert signature(identity(5)) == 1
    for i in range(1, 5):
        for j in range(i + 1, 6):
            assert signature(transposition(i, j, 5)) == -1


def test_signature_is_multiplicative_on_s4():
    group = enumerate_group(4)
    for s in group:
        for t in group:
            assert signature(compose(s, t)) == signature(s) * signature(t)


@given(s=permutations_of(8), t=permutations_of(8))
def test_signature_is_multiplicative_at_degree_eight(s, t):
    assert signature(compose(s, t)) == signature(s) * signature(t)


@given(s=permutations_of(7))
def test_signature_matches_sympy(s):
    assert signature(s) == SympyPermutation([x - 1 for x in s.images]).signature()


def test_cycle_decompose_examples():
    assert cycle_decompose(identity(4)) == [(1,), (2,), (3,), (4,)]
    assert cycle_decompose(Permutation([2, 3, 1])) == [(1, 2, 3)]


def test_cycle_restrictions_recompose_in_any_order():
    for s in enumerate_group(5):
        cycles = cycle_decompose(s)
        assert sorted(x for c in cycles for x in c) == [1, 2, 3, 4, 5]
        product = identity(5)
        for cycle in reversed(cycles):
            product = compose(product, cycle_restriction(s, cycle))
        assert product == s


def test_cycle_type_examples():
    assert cycle_type(identity(3)) == Partition((1, 1, 1))
    assert cycle_type(transposition(1, 2, 4)) == Partition((2, 1, 1))


def test_cycle_types_count_partitions():
    for n in range(1, 7):
        types = {cycle_type(s) for s in enumerate_group(n)}
        assert len(types) == len(partitions_of(n))
        assert set(conjugacy_classes(n)) == types


def test_is_circular():
    assert is_circular(Permutation([2, 3, 4, 1]))
    assert not is_circular(Permutation([2, 1, 4, 3]))
    assert sum(is_circular(s) for s in enumerate_group(5)) == factorial(4)


def test_embed():
    assert embed(transposition(1, 2, 2), 4) == Permutation([2, 1, 3, 4])
    s = Permutation([3, 1, 2])
    assert embed(s, 3) == s
    with pytest.raises(DomainError):
        embed(identity(4), 3)


def test_embed_is_an_injective_homomorphism():
    group = enumerate_group(4)
    images = {embed(s, 6) for s in group}
    assert len(images) == len(group)
    for a in group:
        for b in group:
            assert embed(compose(a, b), 6) == compose(embed(a, 6), embed(b, 6))


@pytest.mark.parametrize("n", [1, 3, 6])
def test_enumerate_group(n):
    group = enumerate_group(n)
    assert len(group) == factorial(n)
    assert len(set(group)) == factorial(n)
    assert group == sorted(group)


def test_enumeration_bound(small_bound):
    assert len(enumerate_group(4)) == 24
    with pytest.raises(EnumerationBoundError):
        enumerate_group(5)
    with pytest.raises(DomainError):
        enumerate_group(0)


def test_text_form():
    s = parse_permutation("2 3 1")
    assert s == Permutation([2, 3, 1])
    assert format_permutation(s) == "2 3 1"
    assert str(s) == "2 3 1"
    with pytest.raises(InvalidPermutationError):
        parse_permutation("1 x")
