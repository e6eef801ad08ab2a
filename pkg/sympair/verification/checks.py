"""
Identity checks

Each family takes the pair parameter n (or nothing, for the divisor side),
the expected constants and a seeded rng, and returns CheckResult rows. All
group-side comparisons are exact equalities of rationals.
"""

import random
from collections import Counter
from fractions import Fraction
from math import factorial, fsum

import numpy as np
from sympy import zeta

from ..config import settings
from ..schemas.schemas import CheckResult
from ..services.gelfand import (
    DoubleCosetLabel, biinvariant_project, candidate, chi_basis, coset_label,
    double_coset_of, double_coset_orbit_count, find_spherical_functions,
    satisfies_character_relation, spherical_phi, trivial_spherical, verify_spherical,
)
from ..services.group_algebra import (
    check_involution, delta, essential_idempotency, fn_convolve,
    inner_product, is_idempotent, measure_convolve,
)
from ..services.heat import (
    HeatState, embedded_haar, heat_iterate, heat_solve, heat_step, radon_of_solution, sub_laplacian,
)
from ..services.perm_core import (
    compose, conjugacy_classes, cycle_decompose, cycle_restriction, cycle_type, embed,
    enumerate_group, identity, inverse, signature, transposition,
)
from ..services.radon import (
    ArithmeticFn, divisor_radon_table, horocyclic_radon, mobius_invert, mobius_table,
)
from ..services.sampling import (
    random_biinvariant, random_element, random_nonnegative,
)
from ..services.spherical_fourier import (
    chain_transform, invert_biinvariant, lambda_averages, ladder_level_formula,
    plancherel_weights, spherical_transform, transform_pair,
)
from ..services.young import (
    act_on_tableau, act_on_tabloid, act_on_tabloid_vector, column_stabilizer, conjugate,
    ideal_dimension, partitions_of, polytabloid, primitive_idempotent, row_stabilizer,
    specht_dimension, specht_polytabloid, standard_tableaux, tabloid_count, tabloid_of,
    tabloids_of_shape,
)
from .expected import ExpectedConstants


class CheckLog:
    """Collects CheckResult rows for one identity family"""

    def __init__(self, group: str):
        self.group = group
        self.results: list[CheckResult] = []

    def record(self, name: str, n: int | None, passed: bool, detail: str = "") -> bool:
        self.results.append(
            CheckResult(name=name, group=self.group, n=n, passed=bool(passed), detail="" if passed else detail)
        )
        return passed


def check_permutations(m: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    """Cycle decomposition, signature and embedding over every element of S_m"""
    log = CheckLog("permutations")
    group = enumerate_group(m)
    points = list(range(1, m + 1))
    partitioned, recomposed, typed = True, True, True
    for s in group:
        cycles = cycle_decompose(s)
        partitioned &= sorted(x for c in cycles for x in c) == points
        product = identity(m)
        for cycle in reversed(cycles):
            product = compose(product, cycle_restriction(s, cycle))
        recomposed &= product == s
        typed &= sorted(cycle_type(s).parts) == sorted(len(c) for c in cycles)
    log.record("cycles partition 1..m", m, partitioned)
    log.record("cycle restrictions recompose to s", m, recomposed)
    log.record("cycle type lists the cycle lengths", m, typed)

    multiplicative, homomorphism = True, True
    for a in group:
        big_a = embed(a, m + 1)
        for b in group:
            ab = compose(a, b)
            multiplicative &= signature(ab) == signature(a) * signature(b)
            homomorphism &= embed(ab, m + 1) == compose(big_a, embed(b, m + 1))
    log.record("signature is multiplicative", m, multiplicative)
    log.record(
        "transpositions are odd", m,
        all(signature(transposition(1, j, m)) == -1 for j in range(2, m + 1)),
    )
    log.record("embedding into S_(m+1) is a homomorphism", m, homomorphism)
    return log.results


def check_double_cosets(n: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    log = CheckLog("double cosets")
    group = enumerate_group(n + 1)
    counts = Counter(double_coset_of(s) for s in group)
    sizes = (counts[DoubleCosetLabel.SUBGROUP], counts[DoubleCosetLabel.TRANSVERSAL])
    log.record("exactly two double cosets", n, len(counts) == 2, f"found {len(counts)}")
    log.record(
        "double coset sizes", n, sizes == tuple(expected.double_coset_sizes(n)),
        f"enumerated {sizes}, expected {expected.double_coset_sizes(n)}",
    )
    fibers = Counter(coset_label(s) for s in group)
    log.record(
        "right cosets are the fibers of s -> s(n+1)", n,
        len(fibers) == n + 1 and set(fibers.values()) == {factorial(n)},
        f"fiber sizes {sorted(fibers.values())}",
    )
    log.record(
        "tau_{i,n+1} lie in the transversal double coset", n,
        all(double_coset_of(transposition(i, n + 1, n + 1)) is DoubleCosetLabel.TRANSVERSAL for i in range(1, n + 1)),
    )
    if n <= 5:
        orbits = double_coset_orbit_count(n)
        log.record("orbits on the product of coset spaces", n, orbits == len(counts), f"{orbits} orbits")
    return log.results


def check_convolution_table(n: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    log = CheckLog("biinvariant algebra")
    basis = chi_basis(n)
    trans, sub = basis.transversal.to_element(), basis.subgroup.to_element()

    a, b = expected.lemma_square(n)
    log.record(
        "chi# * chi# = a chi# + b chi#_id", n,
        fn_convolve(trans, trans) == trans.scale(a) + sub.scale(b),
    )
    c = expected.cross_term(n)
    log.record(
        "chi#_id * chi# = chi# * chi#_id = c chi#", n,
        fn_convolve(sub, trans) == trans.scale(c) and fn_convolve(trans, sub) == trans.scale(c),
    )
    log.record(
        "chi#_id * chi#_id = c chi#_id", n,
        fn_convolve(sub, sub) == sub.scale(expected.identity_square(n)),
    )

    unit = sub.scale(expected.unit_scale(n))
    f, g = (random_biinvariant(rng, n).to_element() for _ in range(2))
    log.record(
        "(n+1) chi_{S_n} is a two-sided unit on biinvariant functions", n,
        fn_convolve(unit, f) == f and fn_convolve(f, unit) == f,
    )
    log.record("biinvariant convolution is commutative", n, fn_convolve(f, g) == fn_convolve(g, f))

    group = enumerate_group(n + 1)
    s, t = rng.choice(group), rng.choice(group)
    log.record(
        "chi_s * chi_t = c chi_st", n,
        fn_convolve(delta(s), delta(t)) == delta(compose(s, t)).scale(expected.point_product(n)),
        f"s={s}, t={t}",
    )
    return log.results


def check_spherical_functions(n: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    log = CheckLog("spherical functions")
    phi = spherical_phi(n)
    log.record(
        "phi_n on the transversal", n, phi.value_on_transversal == expected.phi_transversal(n),
        f"phi_n = {phi.value_on_transversal}, expected {expected.phi_transversal(n)}",
    )
    roots = expected.cubic_roots(n)
    log.record(
        "cubic roots satisfy the character relation", n,
        all(satisfies_character_relation(candidate(n, r)) for r in roots),
    )
    non_roots = [Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-1, n + 2)]
    found = {f.value_on_transversal for f in find_spherical_functions(n, list(roots) + non_roots)}
    wanted = {trivial_spherical(n).value_on_transversal, expected.phi_transversal(n)}
    log.record(
        "spherical functions are exactly 1 and phi_n", n, found == wanted,
        f"found {sorted(found)}, expected {sorted(wanted)}",
    )
    log.record("alpha = 0 fails the functional equation", n, not verify_spherical(candidate(n, 0)))
    element = phi.to_element()
    log.record(
        "<phi_n, phi_n>", n, inner_product(element, element) == expected.phi_norm(n),
        f"got {inner_product(element, element)}",
    )
    log.record("phi_n is inverse-symmetric", n, check_involution(element) == element)
    return log.results


def check_transform(n: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    log = CheckLog("spherical transform")
    phi = spherical_phi(n).to_element()
    agree, sees_projection = True, True
    for _ in range(settings.verify_samples):
        f = random_element(rng, n + 1)
        agree &= spherical_transform(f, n) == inner_product(f, phi)
        if n <= 4:
            sees_projection &= transform_pair(f, n) == transform_pair(biinvariant_project(f), n)
    log.record("(lambda_1 - lambda_2)/(n+1) = <f, phi_n>", n, agree)
    if n <= 4:
        log.record("transform only sees the biinvariant projection", n, sees_projection)

    weights = plancherel_weights(n)
    log.record(
        "Plancherel weights", n, weights == tuple(expected.plancherel(n)),
        f"solved {weights}, expected {expected.plancherel(n)}",
    )
    forward, backward = True, True
    for _ in range(settings.round_trip_samples):
        f = random_biinvariant(rng, n)
        coefficients = transform_pair(f.to_element(), n)
        forward &= invert_biinvariant(coefficients) == f
        backward &= transform_pair(invert_biinvariant(coefficients).to_element(), n) == coefficients
    log.record("inversion recovers biinvariant functions", n, forward)
    log.record("transform recovers coefficient pairs", n, backward)
    return log.results


def check_ladder(n: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    log = CheckLog("chain ladder")
    m = n + 1
    e, t = identity(m), lambda i, j: transposition(i, j, m)
    level1, level2, top = True, True, True
    for _ in range(settings.verify_samples):
        f = random_element(rng, m)
        chain = chain_transform(f, n)
        a, b = expected.ladder_level1
        level1 &= chain.fhat[0] == a * f[e] - b * f[t(1, 2)] == ladder_level_formula(f, 1)
        if n >= 2:
            a, b = expected.ladder_level2
            tail = f[t(1, 3)] + f[compose(t(1, 3), t(1, 2))] + f[compose(t(1, 2), t(1, 3))] + f[t(2, 3)]
            level2 &= chain.fhat[1] == a * (f[e] + f[t(1, 2)]) - b * tail == ladder_level_formula(f, 2)
        top &= chain.fhat[-1] == spherical_transform(f, n)
    log.record("level 1 closed expansion", n, level1)
    if n >= 2:
        log.record("level 2 closed expansion", n, level2)
    log.record("top level equals the spherical transform", n, top)
    return log.results


def check_young(m: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    """Polytabloid identities on S_m"""
    log = CheckLog("young")
    shapes = partitions_of(m)
    log.record(
        "partitions index the conjugacy classes", m, set(shapes) == set(conjugacy_classes(m)),
    )
    essential, normalized, primitive, counts, specht = True, True, True, True, True
    squares = 0
    for shape in shapes:
        dimension = ideal_dimension(shape)
        squares += dimension ** 2
        specht &= specht_dimension(shape) == dimension
        counts &= len(tabloids_of_shape(shape)) == tabloid_count(shape)
        for t in standard_tableaux(shape):
            factor = essential_idempotency(polytabloid(t))
            essential &= factor is not None and factor != 0
            if factor is None:
                continue
            normalized &= factor * dimension == expected.idempotency_product(m)
            primitive &= is_idempotent(primitive_idempotent(t))
    log.record("e_t is essentially idempotent", m, essential)
    log.record("lambda_t * dim O_t", m, normalized)
    log.record("e_t / lambda_t is idempotent", m, primitive)
    log.record("sum of dim^2 = m!", m, squares == factorial(m), f"got {squares}")
    log.record("Specht span and left ideal have equal dimension", m, specht)
    log.record("tabloid count m!/prod mu_i!", m, counts)
    return log.results


def check_young_exhaustive(m: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    """Conjugation identities over every pi in S_m and every standard filling"""
    log = CheckLog("young actions")
    rows_ok, cols_ok, tabloids_ok, conjugation_ok, specht_ok = True, True, True, True, True
    group = enumerate_group(m)
    for shape in partitions_of(m):
        for t in standard_tableaux(shape):
            rows, cols = row_stabilizer(t), column_stabilizer(t)
            e_t, vector = polytabloid(t), specht_polytabloid(t)
            for pi in group:
                pt = act_on_tableau(pi, t)
                pi_inv = inverse(pi)
                rows_ok &= set(row_stabilizer(pt)) == {compose(compose(pi, s), pi_inv) for s in rows}
                cols_ok &= set(column_stabilizer(pt)) == {compose(compose(pi, s), pi_inv) for s in cols}
                tabloids_ok &= act_on_tabloid(pi, tabloid_of(t)) == tabloid_of(pt)
                conjugation_ok &= conjugate(pi, e_t) == polytabloid(pt)
                specht_ok &= act_on_tabloid_vector(pi, vector) == specht_polytabloid(pt)
    log.record("P_{pi t} = pi P_t pi^-1", m, rows_ok)
    log.record("Q_{pi t} = pi Q_t pi^-1", m, cols_ok)
    log.record("pi {t} = {pi t}", m, tabloids_ok)
    log.record("delta_pi * e_t * delta_pi^-1 = e_{pi t}", m, conjugation_ok)
    log.record("pi e_t = e_{pi t} in M^mu", m, specht_ok)
    return log.results


def check_group_radon(n: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    log = CheckLog("horocyclic Radon")
    kernel = chi_basis(n).subgroup.to_element().scale(expected.unit_scale(n))
    e = identity(n + 1)
    idempotent, at_identity, kernel_ok, constant = True, True, True, True
    for _ in range(max(1, settings.verify_samples // 4)):
        f = random_element(rng, n + 1)
        rf = horocyclic_radon(f, n)
        idempotent &= horocyclic_radon(rf, n) == rf
        at_identity &= rf[e] == lambda_averages(f, n)[0]
        kernel_ok &= rf == fn_convolve(f, kernel)
        per_label: dict[int, set[Fraction]] = {}
        for s in enumerate_group(n + 1):
            per_label.setdefault(coset_label(s), set()).add(rf[s])
        constant &= all(len(values) == 1 for values in per_label.values())
    log.record("R is idempotent", n, idempotent)
    log.record("Rf(Id) = lambda_1", n, at_identity)
    log.record("Rf = f * (n+1) chi_{S_n}", n, kernel_ok)
    log.record("Rf is constant on right cosets", n, constant)
    return log.results


def check_divisor_radon(expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    log = CheckLog("divisor Radon")
    bound = settings.divisor_truncation
    mu = mobius_table(bound).astype(np.int64)
    divisor_sums = np.zeros(bound, dtype=np.int64)
    for d in range(1, bound + 1):
        divisor_sums[d - 1::d] += mu[d - 1]
    indicator = np.zeros(bound, dtype=np.int64)
    indicator[0] = 1
    log.record("sum_{d|m} mu(d) = [m = 1]", None, bool(np.array_equal(divisor_sums, indicator)))

    support = 20
    values = np.zeros(support * support)
    values[:support] = [rng.randint(-9, 9) for _ in range(support)]
    finite = ArithmeticFn(values)
    rf = divisor_radon_table(finite)
    exact = all(mobius_invert(rf, k) == finite(k) for k in range(1, finite.N + 1))
    log.record("finite-support round trip is exact", None, exact)

    decaying = ArithmeticFn.from_callable(lambda k: k ** -3.0, bound, decay_exponent=3.0)
    rd = divisor_radon_table(decaying)
    zeta3 = float(zeta(3))
    log.record(
        "Rf(1) approximates zeta(3)", None, abs(rd(1) - zeta3) < settings.divisor_tolerance,
        f"Rf(1) = {rd(1)!r}",
    )
    partial = fsum(k ** -3.0 for k in range(1, bound + 1))
    log.record("Rf(1) equals the direct partial sum", None, abs(rd(1) - partial) < 1e-12)
    error = max(abs(mobius_invert(rd, k) - decaying(k)) for k in range(1, 11))
    log.record(
        "decaying round trip within tolerance", None, error < settings.divisor_tolerance,
        f"max error {error!r}",
    )
    return log.results


def check_heat(n: int, expected: ExpectedConstants, rng: random.Random) -> list[CheckResult]:
    log = CheckLog("heat")
    nu = embedded_haar(n)
    if n <= 6:
        log.record("nu * nu = nu", n, measure_convolve(nu, nu) == nu)
    dirac = delta(identity(n + 1))
    log.record(
        "delta_e evolves to nu", n, all(heat_solve(dirac, k, n) == nu for k in range(1, 4)),
    )

    closed, mass, positive, laplacian, radon = True, True, True, True, True
    for _ in range(2):
        f0 = random_element(rng, n + 1, density=0.25)
        # f0 * nu, the solution at every k >= 1
        settled = heat_solve(f0, 1, n)
        state = HeatState(0, f0)
        for k in range(1, 11):
            state = heat_step(state)
            closed &= state.state == settled
            mass &= state.state.total_mass == f0.total_mass
        closed &= heat_solve(f0, 10, n) == settled and heat_iterate(f0, 2, n) == settled
        laplacian &= sub_laplacian(f0, n) == settled - f0
        radon &= radon_of_solution(f0, 3, n) == measure_convolve(horocyclic_radon(f0, n), nu)
        g0 = random_nonnegative(rng, n + 1)
        positive &= all(v >= 0 for v in heat_solve(g0, 1, n).coeffs.values())
    log.record("closed form equals iteration for k <= 10", n, closed)
    log.record("mass is preserved", n, mass)
    log.record("non-negativity is preserved", n, positive)
    log.record("Delta f = heat_step(f) - f", n, laplacian)
    log.record("R(f_k) = R(f_0) * nu", n, radon)
    return log.results
