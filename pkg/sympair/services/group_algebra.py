"""
The group algebra of S_n over the rationals

Two products are exposed:
  * measure_convolve: bilinear extension of delta_s * delta_t = delta_{st}
  * fn_convolve: (f*g)(x) = (1/|G|) sum_y f(y) g(y^-1 x), normalized Haar measure
"""

from collections import defaultdict
from fractions import Fraction
from math import factorial, lcm
from typing import Callable, Iterable, Mapping

from loguru import logger

from ..exceptions import DegreeMismatchError, DomainError
from .perm_core import Permutation, check_bound, compose, enumerate_group, identity, inverse

Scalar = Fraction


class AlgebraElement:
    """
    Finitely supported map Permutation -> Fraction on S_n.

    Zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Permutation, Fraction | int] | None = None):
        if degree < 1:
            raise DomainError(f"degree must be at least 1, got {degree}")
        clean: dict[Permutation, Fraction] = {}
        for perm, value in (coeffs or {}).items():
            if perm.degree != degree:
                raise DegreeMismatchError(f"{perm!r} does not have degree {degree}")
            value = Fraction(value)
            if value:
                clean[perm] = value
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def _trusted(cls, degree: int, coeffs: dict[Permutation, Fraction]) -> "AlgebraElement":
        element = cls.__new__(cls)
        element.degree = degree
        element.coeffs = {p: v for p, v in coeffs.items() if v}
        return element

    @classmethod
    def zero(cls, degree: int) -> "AlgebraElement":
        return cls._trusted(degree, {})

    @classmethod
    def from_function(cls, degree: int, fn: Callable[[Permutation], Fraction | int]) -> "AlgebraElement":
        return cls._trusted(degree, {s: Fraction(fn(s)) for s in enumerate_group(degree)})

    @classmethod
    def constant(cls, degree: int, value: Fraction | int = 1) -> "AlgebraElement":
        return cls.from_function(degree, lambda _: value)

    @classmethod
    def indicator(cls, degree: int, perms: Iterable[Permutation]) -> "AlgebraElement":
        return cls(degree, {p: Fraction(1) for p in perms})

    def __getitem__(self, perm: Permutation) -> Fraction:
        return self.coeffs.get(perm, Fraction(0))

    def __call__(self, perm: Permutation) -> Fraction:
        return self[perm]

    @property
    def support(self) -> list[Permutation]:
        return sorted(self.coeffs)

    def items(self) -> list[tuple[Permutation, Fraction]]:
        return sorted(self.coeffs.items())

    @property
    def total_mass(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "AlgebraElement") -> None:
        if self.degree != other.degree:
            raise DegreeMismatchError(f"degrees differ: {self.degree} vs {other.degree}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for p, v in other.coeffs.items():
            out[p] = out.get(p, Fraction(0)) + v
        return AlgebraElement._trusted(self.degree, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._trusted(self.degree, {p: -v for p, v in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, factor: Fraction | int) -> "AlgebraElement":
        factor = Fraction(factor)
        return AlgebraElement._trusted(self.degree, {p: factor * v for p, v in self.coeffs.items()})

    def __rmul__(self, factor: Fraction | int) -> "AlgebraElement":
        return self.scale(factor)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        terms = ", ".join(f"{p.images}: {v}" for p, v in self.items()[:6])
        more = ", ..." if len(self.coeffs) > 6 else ""
        return f"AlgebraElement(degree={self.degree}, {{{terms}{more}}})"


def delta(s: Permutation) -> AlgebraElement:
    """Dirac measure at s"""
    return AlgebraElement._trusted(s.degree, {s: Fraction(1)})


def _check_degrees(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degrees differ: {a.degree} vs {b.degree}")


def measure_convolve(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """sum_s sum_t a(s) b(t) delta_{st}"""
    _check_degrees(a, b)
    # Accumulate integer numerators over the common denominator da * db
    da = lcm(*(v.denominator for v in a.coeffs.values()))
    db = lcm(*(v.denominator for v in b.coeffs.values()))
    b_terms = [
        (tuple(x - 1 for x in t.images), bv.numerator * (db // bv.denominator))
        for t, bv in b.coeffs.items()
    ]
    totals: defaultdict[tuple[int, ...], int] = defaultdict(int)
    for s, av in a.coeffs.items():
        image_of = s.images.__getitem__
        an = av.numerator * (da // av.denominator)
        for positions, bn in b_terms:
            # (s t)(i) = s(t(i))
            totals[tuple(map(image_of, positions))] += an * bn
    logger.debug(f"measure_convolve on S_{a.degree}: {len(a.coeffs)} x {len(b_terms)} terms")
    scale = da * db
    return AlgebraElement._trusted(
        a.degree, {Permutation._trusted(images): Fraction(total, scale) for images, total in totals.items()}
    )


def fn_convolve(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """(f*g)(x) = (1/|G|) sum_y f(y) g(y^-1 x)"""
    # Substituting z = y^-1 x turns the sum into the measure product
    return measure_convolve(f, g).scale(Fraction(1, factorial(f.degree)))


def fn_convolve_pointwise(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """Literal evaluation of the normalized convolution at every x; slow reference"""
    _check_degrees(f, g)
    group = enumerate_group(f.degree)
    order = Fraction(1, len(group))
    out = {}
    for x in group:
        out[x] = order * sum(
            (fy * g[compose(inverse(y), x)] for y, fy in f.coeffs.items()),
            Fraction(0),
        )
    return AlgebraElement._trusted(f.degree, out)


def haar(n: int) -> AlgebraElement:
    """nu = (1/n!) sum_{s in S_n} delta_s"""
    check_bound(n)
    weight = Fraction(1, factorial(n))
    return AlgebraElement._trusted(n, {s: weight for s in enumerate_group(n)})


def inner_product(f: AlgebraElement, g: AlgebraElement) -> Fraction:
    """<f,g> = (1/|G|) sum_s f(s) g(s)"""
    _check_degrees(f, g)
    small, large = (f, g) if len(f.coeffs) <= len(g.coeffs) else (g, f)
    total = sum((v * large[p] for p, v in small.coeffs.items()), Fraction(0))
    return total / factorial(f.degree)


def check_involution(f: AlgebraElement) -> AlgebraElement:
    """f_check(x) = f(x^-1); over the rationals this is also f-tilde"""
    return AlgebraElement._trusted(f.degree, {inverse(p): v for p, v in f.coeffs.items()})


def essential_idempotency(e: AlgebraElement) -> Fraction | None:
    """
    Return lambda with e*e = lambda e and lambda != 0, else None.

    lambda == 1 marks a genuine idempotent.
    """
    if e.is_zero():
        raise DomainError("essential idempotency is undefined for the zero element")
    square = measure_convolve(e, e)
    pivot, pivot_value = next(iter(e.coeffs.items()))
    factor = square[pivot] / pivot_value
    if factor == 0 or square != e.scale(factor):
        return None
    return factor


def is_idempotent(e: AlgebraElement) -> bool:
    return essential_idempotency(e) == 1


def unit(n: int) -> AlgebraElement:
    return delta(identity(n))
