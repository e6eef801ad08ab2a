"""
Verification runner

Runs every identity family for pair parameters 2..n_max and collects the
rows into a VerificationReport. Recovery residuals are attached for
inspection and never affect `passed`.
"""

from typing import Callable

from loguru import logger

from ..config import settings
from ..exceptions import DomainError, EnumerationBoundError
from ..schemas.schemas import CheckResult, ResidualRow, VerificationReport
from ..services.group_algebra import AlgebraElement, delta
from ..services.perm_core import identity
from ..services.sampling import make_rng, random_element
from ..services.spherical_fourier import residual_table
from . import checks
from .expected import EXPECTED, ExpectedConstants

# (family, largest pair parameter it runs at)
PAIR_FAMILIES: list[tuple[Callable, int | None]] = [
    (checks.check_double_cosets, None),
    (checks.check_convolution_table, None),
    (checks.check_spherical_functions, 4),
    (checks.check_transform, None),
    (checks.check_ladder, None),
    (checks.check_group_radon, None),
    (checks.check_heat, None),
]

# Permutation and Young identities run on S_m for m = 2..min(n_max + 1, limit)
PERMUTATION_LIMIT = 5
YOUNG_LIMIT = 5
EXHAUSTIVE_DEGREE = 4


def _residual_rows(n: int, rng) -> list[ResidualRow]:
    samples: list[tuple[str, AlgebraElement]] = [
        ("one", AlgebraElement.constant(n + 1)),
        ("delta_id", delta(identity(n + 1))),
    ]
    samples += [(f"random-{i}", random_element(rng, n + 1)) for i in range(settings.verify_samples)]
    return [ResidualRow(n=n, label=label, residual=value) for label, value in residual_table(samples)]


def run_verification(
    n_max: int,
    expected: ExpectedConstants = EXPECTED,
    seed: int | None = None,
    corrupted: str | None = None,
) -> VerificationReport:
    if n_max < 2:
        raise DomainError(f"verification needs n_max >= 2, got {n_max}")
    if n_max + 1 > settings.enumeration_bound:
        # n_max is the pair parameter; the suite enumerates S_(n_max+1)
        raise EnumerationBoundError(
            f"n_max = {n_max} needs S_{n_max + 1}, beyond the enumeration bound {settings.enumeration_bound}"
        )
    rng = make_rng(seed)
    results: list[CheckResult] = []

    permutation_top = min(n_max + 1, PERMUTATION_LIMIT)
    logger.info(f"Running permutation identities for S_2..S_{permutation_top}")
    for m in range(2, permutation_top + 1):
        results.extend(checks.check_permutations(m, expected, rng))

    for family, limit in PAIR_FAMILIES:
        top = n_max if limit is None else min(n_max, limit)
        logger.info(f"Running {family.__name__} for n = 2..{top}")
        for n in range(2, top + 1):
            results.extend(family(n, expected, rng))

    young_top = min(n_max + 1, YOUNG_LIMIT)
    logger.info(f"Running Young identities for S_2..S_{young_top}")
    for m in range(2, young_top + 1):
        results.extend(checks.check_young(m, expected, rng))
    results.extend(checks.check_young_exhaustive(min(n_max + 1, EXHAUSTIVE_DEGREE), expected, rng))

    logger.info("Running divisor Radon identities")
    results.extend(checks.check_divisor_radon(expected, rng))

    for failure in (r for r in results if not r.passed):
        logger.warning(f"Check failed: [{failure.group}] {failure.name} (n={failure.n}) {failure.detail}")

    residuals = [row for n in range(2, n_max + 1) for row in _residual_rows(n, rng)]
    report = VerificationReport(n_max=n_max, checks=results, residuals=residuals, corrupted=corrupted)
    logger.info(f"Verification finished: {len(results) - len(report.failures)}/{len(results)} passed")
    return report
