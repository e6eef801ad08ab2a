"""
Permutations of {1..n} in one-line notation

Composition convention: (a*b)(i) = a(b(i)), the right factor acts first.
Cycle notation is derived on demand and never stored.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from loguru import logger

from ..config import settings
from ..exceptions import (
    DegreeMismatchError, DomainError, EnumerationBoundError,
    InvalidPartitionError, InvalidPermutationError,
)


class Permutation:
    """A bijection of {1..n}; images[i-1] = sigma(i)"""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if not images:
            raise InvalidPermutationError("degree must be at least 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutationError(f"{images} is not a rearrangement of 1..{len(images)}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        # Skips validation; callers guarantee bijectivity
        perm = cls.__new__(cls)
        object.__setattr__(perm, "images", images)
        object.__setattr__(perm, "_hash", hash(images))
        return perm

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return format_permutation(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive parts; weight = sum of parts"""
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidPartitionError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise InvalidPartitionError(f"{parts} has a non-positive part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartitionError(f"{parts} is not weakly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def identity(n: int) -> Permutation:
    if n < 1:
        raise InvalidPermutationError("degree must be at least 1")
    return Permutation._trusted(tuple(range(1, n + 1)))


def transposition(i: int, j: int, n: int) -> Permutation:
    """tau_{i,j} of degree n; tau_{i,i} is the identity"""
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"transposition ({i} {j}) does not act on 1..{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation._trusted(tuple(images))


def _check_degrees(a: Permutation, b: Permutation) -> None:
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degrees differ: {a.degree} vs {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a*b)(i) = a(b(i))"""
    _check_degrees(a, b)
    ai = a.images
    return Permutation._trusted(tuple(ai[x - 1] for x in b.images))


def inverse(s: Permutation) -> Permutation:
    inv = [0] * s.degree
    for i, x in enumerate(s.images, start=1):
        inv[x - 1] = i
    return Permutation._trusted(tuple(inv))


def cycle_decompose(s: Permutation) -> list[tuple[int, ...]]:
    """
    Cycles of s, each starting at its smallest element, ordered by that element.
    Fixed points appear as singleton cycles.
    """
    seen: set[int] = set()
    cycles = []
    for start in range(1, s.degree + 1):
        if start in seen:
            continue
        cycle = []
        current = start
        while current not in seen:
            seen.add(current)
            cycle.append(current)
            current = s(current)
        cycles.append(tuple(cycle))
    return cycles


def cycle_restriction(s: Permutation, cycle: Sequence[int]) -> Permutation:
    """sigma|_S: agrees with s on the cycle S, identity outside it"""
    images = list(range(1, s.degree + 1))
    for i in cycle:
        images[i - 1] = s(i)
    return Permutation._trusted(tuple(images))


def is_circular(s: Permutation) -> bool:
    """Only the empty set and {1..n} are invariant under s"""
    return len(cycle_decompose(s)) == 1


def signature(s: Permutation) -> int:
    # A cycle of length L is a product of L-1 transpositions
    transpositions = sum(len(c) - 1 for c in cycle_decompose(s))
    return -1 if transpositions % 2 else 1


def cycle_type(s: Permutation) -> Partition:
    return Partition(tuple(sorted((len(c) for c in cycle_decompose(s)), reverse=True)))


def embed(s: Permutation, m: int) -> Permutation:
    """Extend s to degree m by fixing degree+1..m"""
    if m < s.degree:
        raise DomainError(f"cannot embed degree {s.degree} into degree {m}")
    return Permutation._trusted(s.images + tuple(range(s.degree + 1, m + 1)))


def check_bound(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if n > settings.enumeration_bound:
        raise EnumerationBoundError(
            f"n = {n} exceeds the enumeration bound {settings.enumeration_bound}"
        )


@lru_cache(maxsize=None)
def _all_permutations(n: int) -> tuple[Permutation, ...]:
    group = tuple(Permutation._trusted(p) for p in permutations(range(1, n + 1)))
    logger.debug(f"Enumerated S_{n}: {len(group)} elements")
    return group


def enumerate_group(n: int) -> list[Permutation]:
    """All n! permutations of degree n in lexicographic order"""
    check_bound(n)
    return list(_all_permutations(n))


def conjugacy_classes(n: int) -> dict[Partition, list[Permutation]]:
    """Conjugacy classes of S_n keyed by cycle type"""
    classes: dict[Partition, list[Permutation]] = {}
    for s in enumerate_group(n):
        classes.setdefault(cycle_type(s), []).append(s)
    return classes


def parse_permutation(text: str) -> Permutation:
    """Parse the space-separated one-line form, e.g. "2 3 1" """
    try:
        images = [int(tok) for tok in text.split()]
    except ValueError as e:
        raise InvalidPermutationError(f"not a list of integers: {text!r}") from e
    return Permutation(images)


def format_permutation(s: Permutation) -> str:
    return " ".join(str(x) for x in s.images)
