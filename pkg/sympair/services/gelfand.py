"""
The Gelfand pair (S_{n+1}, S_n)

S_n sits inside S_{n+1} as the stabilizer of the point n+1. Right cosets are
labelled by s(n+1), and there are exactly two double cosets: S_n itself and
S_n tau_{1,n+1} S_n.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from loguru import logger

from ..exceptions import DegreeMismatchError, DomainError, NotBiinvariantError
from .group_algebra import AlgebraElement, check_involution, fn_convolve, inner_product
from .perm_core import (
    Permutation, compose, enumerate_group, identity, inverse, transposition,
)


class DoubleCosetLabel(str, Enum):
    SUBGROUP = "subgroup"          # S_n
    TRANSVERSAL = "transversal"    # S_n tau_{1,n+1} S_n


def _pair_parameter(degree: int) -> int:
    if degree < 2:
        raise DomainError(f"the pair (S_(n+1), S_n) needs degree >= 2, got {degree}")
    return degree - 1


def coset_label(s: Permutation) -> int:
    """s(n+1): equal labels iff same right coset s S_n"""
    _pair_parameter(s.degree)
    return s(s.degree)


def coset_representative(label: int, n: int) -> Permutation:
    """tau_{label,n+1}, the identity for label n+1"""
    if not 1 <= label <= n + 1:
        raise DomainError(f"coset label {label} outside 1..{n + 1}")
    return transposition(label, n + 1, n + 1)


def double_coset_of(s: Permutation) -> DoubleCosetLabel:
    top = s.degree
    _pair_parameter(top)
    return DoubleCosetLabel.SUBGROUP if s(top) == top else DoubleCosetLabel.TRANSVERSAL


def double_coset_sizes(n: int) -> dict[DoubleCosetLabel, int]:
    """Closed-form sizes n! and n n!"""
    return {
        DoubleCosetLabel.SUBGROUP: factorial(n),
        DoubleCosetLabel.TRANSVERSAL: n * factorial(n),
    }


@dataclass(frozen=True)
class BiinvariantFn:
    """A function on S_{n+1} constant on each of the two double cosets"""
    n: int
    value_on_subgroup: Fraction
    value_on_transversal: Fraction

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"pair parameter must be at least 1, got {self.n}")
        object.__setattr__(self, "value_on_subgroup", Fraction(self.value_on_subgroup))
        object.__setattr__(self, "value_on_transversal", Fraction(self.value_on_transversal))

    def value(self, label: DoubleCosetLabel) -> Fraction:
        if label is DoubleCosetLabel.SUBGROUP:
            return self.value_on_subgroup
        return self.value_on_transversal

    def __call__(self, s: Permutation) -> Fraction:
        if s.degree != self.n + 1:
            raise DegreeMismatchError(f"expected degree {self.n + 1}, got {s.degree}")
        return self.value(double_coset_of(s))

    def _check(self, other: "BiinvariantFn") -> None:
        if self.n != other.n:
            raise DegreeMismatchError(f"pair parameters differ: {self.n} vs {other.n}")

    def __add__(self, other: "BiinvariantFn") -> "BiinvariantFn":
        self._check(other)
        return BiinvariantFn(
            self.n,
            self.value_on_subgroup + other.value_on_subgroup,
            self.value_on_transversal + other.value_on_transversal,
        )

    def scale(self, factor: Fraction | int) -> "BiinvariantFn":
        return BiinvariantFn(self.n, factor * self.value_on_subgroup, factor * self.value_on_transversal)

    def __rmul__(self, factor: Fraction | int) -> "BiinvariantFn":
        return self.scale(factor)

    def to_element(self) -> AlgebraElement:
        return AlgebraElement.from_function(self.n + 1, self)

    @classmethod
    def from_element(cls, f: AlgebraElement) -> "BiinvariantFn":
        n = _pair_parameter(f.degree)
        top = f.degree
        sub, trans = identity(top), transposition(1, top, top)
        restored = cls(n, f[sub], f[trans])
        if restored.to_element() != f:
            raise NotBiinvariantError(f"element on S_{top} is not S_{n}-biinvariant")
        return restored


def is_biinvariant(f: AlgebraElement) -> bool:
    try:
        BiinvariantFn.from_element(f)
    except NotBiinvariantError:
        return False
    return True


def biinvariant_project(f: AlgebraElement) -> AlgebraElement:
    """
    f#(x) = (1/n!^2) sum_{tau,h in S_n} f(tau x h).

    (tau, h) -> tau x h covers the double coset of x uniformly, so f#(x) is the
    average of f over that double coset.
    """
    n = _pair_parameter(f.degree)
    sums = {DoubleCosetLabel.SUBGROUP: Fraction(0), DoubleCosetLabel.TRANSVERSAL: Fraction(0)}
    for s, v in f.coeffs.items():
        sums[double_coset_of(s)] += v
    sizes = double_coset_sizes(n)
    projected = BiinvariantFn(
        n,
        sums[DoubleCosetLabel.SUBGROUP] / sizes[DoubleCosetLabel.SUBGROUP],
        sums[DoubleCosetLabel.TRANSVERSAL] / sizes[DoubleCosetLabel.TRANSVERSAL],
    )
    return projected.to_element()


def biinvariant_project_literal(f: AlgebraElement) -> AlgebraElement:
    """The double average evaluated term by term; reference for small n"""
    n = _pair_parameter(f.degree)
    top = f.degree
    sub = [Permutation._trusted(s.images + (top,)) for s in enumerate_group(n)]
    weight = Fraction(1, factorial(n) ** 2)
    out = {}
    for x in enumerate_group(top):
        total = Fraction(0)
        for tau in sub:
            tx = compose(tau, x)
            for h in sub:
                total += f[compose(tx, h)]
        out[x] = weight * total
    return AlgebraElement(top, out)


class ChiBasis(NamedTuple):
    subgroup: BiinvariantFn       # chi#_{id} = chi_{S_n}
    transversal: BiinvariantFn    # chi#_{1,n+1}


def chi_basis(n: int) -> ChiBasis:
    return ChiBasis(
        subgroup=BiinvariantFn(n, 1, 0),
        transversal=BiinvariantFn(n, 0, 1),
    )


def trivial_spherical(n: int) -> BiinvariantFn:
    """The constant function 1 on S_{n+1}"""
    return BiinvariantFn(n, 1, 1)


def spherical_phi(n: int) -> BiinvariantFn:
    """phi_n = chi#_{id} - (1/n) chi#_{1,n+1}"""
    return BiinvariantFn(n, 1, Fraction(-1, n))


def candidate(n: int, alpha: Fraction | int) -> BiinvariantFn:
    """alpha chi#_{1,n+1} + chi#_{id}"""
    return BiinvariantFn(n, 1, alpha)


def spherical_cubic_roots(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """Roots of alpha (alpha - 1)(alpha + 1/n)"""
    return Fraction(0), Fraction(1), Fraction(-1, n)


def verify_spherical(f: BiinvariantFn) -> bool:
    """
    Exhaustive check of phi(s) phi(z) = (1/n!) sum_{tau in S_n} phi(s tau z)
    over every pair s, z in S_{n+1}.
    """
    n, top = f.n, f.n + 1
    if f.value_on_subgroup != 1:
        return False
    group = enumerate_group(top)
    sub = [s.images + (top,) for s in enumerate_group(n)]
    weight = Fraction(1, factorial(n))
    values = {
        True: f.value_on_subgroup,
        False: f.value_on_transversal,
    }
    for s in group:
        s_img = s.images
        fs = values[s_img[-1] == top]
        for z in group:
            z_top = z.images[-1]
            lhs = fs * values[z_top == top]
            # phi(s tau z) only depends on whether s(tau(z(n+1))) = n+1
            hits = sum(1 for tau in sub if s_img[tau[z_top - 1] - 1] == top)
            rhs = weight * (hits * values[True] + (len(sub) - hits) * values[False])
            if lhs != rhs:
                logger.debug(f"Functional equation fails at s={s.images}, z={z.images}")
                return False
    return True


def satisfies_character_relation(phi: BiinvariantFn) -> bool:
    """phi_check * phi = <phi, phi> phi under the normalized convolution"""
    element = phi.to_element()
    lhs = fn_convolve(check_involution(element), element)
    return lhs == element.scale(inner_product(element, element))


def find_spherical_functions(n: int, alphas) -> list[BiinvariantFn]:
    """Candidates alpha chi#_{1,n+1} + chi#_{id} that pass verify_spherical"""
    return [candidate(n, a) for a in alphas if verify_spherical(candidate(n, a))]


def double_coset_orbit_count(n: int) -> int:
    """
    Number of S_{n+1}-orbits on (S_n \\ S_{n+1}) x (S_{n+1} / S_n) under
    (S_n s, t S_n) -> (S_n s z, z^-1 t S_n).
    """
    top = n + 1
    group = enumerate_group(top)
    # Left coset S_n s is labelled by s^-1(n+1), right coset t S_n by t(n+1)
    left_labels = sorted({inverse(s)(top) for s in group})
    right_labels = sorted({t(top) for t in group})
    pairs = [(a, b) for a in left_labels for b in right_labels]
    orbits, seen = 0, set()
    for pair in pairs:
        if pair in seen:
            continue
        orbits += 1
        a, b = pair
        for z in group:
            # (S_n s z) has label z^-1(s^-1(n+1)); (z^-1 t S_n) has label z^-1(t(n+1))
            zi = inverse(z)
            seen.add((zi(a), zi(b)))
    return orbits
