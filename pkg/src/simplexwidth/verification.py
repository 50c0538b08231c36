"""Cross-checks tying the exact formulas, direction families, energy
growth property, and numerical minimizer to one another.

Each check is a pure function of its arguments (including the seed), so
a verification run is reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .closed_form import (
    SimplexKind,
    alpha_beta_squared,
    center,
    circumdistance_squared,
    circumradius_squared,
    indistance_squared,
    inradius_squared,
    width_for_t,
    width_squared,
)
from .directions import enumerate_optimal_directions, is_optimal_direction
from .energy import energy_push
from .geometry import (
    Vector,
    distance,
    projection_width,
    standard_simplex_vertices,
)
from .optimizer import OptimizerConfig, minimize_width, two_value_enumeration_width

EXACT_MAX_N = 64
RADII_MAX_N = 32
ODD_FAMILY_MAX_N = 11
EVEN_FAMILY_MAX_N = 10
OPTIMIZER_MAX_N = 12
FUZZ_TRIALS = 10_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def derive_seed(seed: int, *key: int) -> int:
    """Child seed from the run seed and an integer key path."""
    return int(np.random.SeedSequence(seed, spawn_key=key).generate_state(1)[0])


def check_exact_identities(max_n: int = EXACT_MAX_N) -> CheckResult:
    """Exact rational identities over n = 1..max_n.

    Parity formulas for the squared width, the regular = standard/2
    halving, the radii halving, the two-value sanity identity, the
    argmin-in-t characterization, strict monotone decrease in n, and
    the inball/width/circumball sandwich.
    """
    name = "exact-rational-identities"
    previous_regular: Fraction | None = None
    for n in range(1, max_n + 1):
        std = width_squared(n, SimplexKind.STANDARD)
        reg = width_squared(n, SimplexKind.REGULAR)
        if n % 2 == 1:
            expected = Fraction(4, n + 1)
        else:
            expected = Fraction(4 * (n + 1), n * (n + 2))
        if std != expected:
            return CheckResult(name, False, f"parity formula mismatch at n={n}")
        if reg * 2 != std:
            return CheckResult(name, False, f"halving identity fails at n={n}")
        if inradius_squared(n) * 2 != indistance_squared(n):
            return CheckResult(name, False, f"inradius halving fails at n={n}")
        if circumradius_squared(n) * 2 != circumdistance_squared(n):
            return CheckResult(name, False, f"circumradius halving fails at n={n}")
        for t in range(1, n + 1):
            a_sq, b_sq = alpha_beta_squared(n, t)
            if t * a_sq + (n + 1 - t) * b_sq != 1:
                return CheckResult(
                    name, False, f"two-value sanity identity fails at n={n}, t={t}"
                )
            if width_for_t(n, t) != width_for_t(n, n + 1 - t):
                return CheckResult(
                    name, False, f"t symmetry fails at n={n}, t={t}"
                )
        minimum = min(width_for_t(n, t) for t in range(1, n + 1))
        argmin = {t for t in range(1, n + 1) if width_for_t(n, t) == minimum}
        if argmin != {(n + 1) // 2, (n + 2) // 2} or minimum != std:
            return CheckResult(name, False, f"t-argmin characterization fails at n={n}")
        if previous_regular is not None and not reg < previous_regular:
            return CheckResult(name, False, f"monotone decrease fails at n={n}")
        previous_regular = reg
        if not indistance_squared(n) <= std / 4 <= circumdistance_squared(n):
            return CheckResult(name, False, f"radius sandwich fails at n={n}")
    return CheckResult(name, True, f"n=1..{max_n}: all identities hold exactly")


def check_radii_distances(max_n: int = RADII_MAX_N) -> CheckResult:
    """Center-to-vertex and center-to-facet-centroid distances against
    the closed forms, within 1e-14 on the squared values."""
    name = "radii-distances"
    for n in range(1, max_n + 1):
        c = center(n)
        vertices = standard_simplex_vertices(n)
        r_out = float(circumdistance_squared(n))
        r_in = float(indistance_squared(n))
        for j, vertex in enumerate(vertices):
            if abs(distance(c, vertex) ** 2 - r_out) > 1e-14:
                return CheckResult(name, False, f"vertex distance off at n={n}, j={j}")
            others = [p for k, p in enumerate(vertices) if k != j]
            centroid = Vector(
                tuple(
                    math.fsum(p.coords[i] for p in others) / n
                    for i in range(n + 1)
                )
            )
            if abs(distance(c, centroid) ** 2 - r_in) > 1e-14:
                return CheckResult(name, False, f"facet distance off at n={n}, j={j}")
    return CheckResult(name, True, f"n=1..{max_n}: radii match within 1e-14")


def check_enumeration_oracle(max_n: int = EXACT_MAX_N) -> CheckResult:
    """Exact two-value enumeration reproduces the closed-form width."""
    name = "enumeration-oracle"
    for n in range(1, max_n + 1):
        result = two_value_enumeration_width(n)
        if result.width_squared_exact != width_squared(n, SimplexKind.STANDARD):
            return CheckResult(name, False, f"enumeration disagrees at n={n}")
    return CheckResult(name, True, f"n=1..{max_n}: enumeration exact")


def check_direction_families(
    odd_max_n: int = ODD_FAMILY_MAX_N, even_max_n: int = EVEN_FAMILY_MAX_N
) -> CheckResult:
    """Every enumerated family member achieves the closed-form width on
    the standard simplex within 1e-12, with the right family size."""
    name = "direction-families"
    for n in range(1, max(odd_max_n, even_max_n) + 1):
        if n % 2 == 1 and n > odd_max_n:
            continue
        if n % 2 == 0 and n > even_max_n:
            continue
        family = enumerate_optimal_directions(n)
        expected_count = math.comb(n + 1, (n + 1) // 2)
        if len(family) != expected_count:
            return CheckResult(
                name,
                False,
                f"family size {len(family)} != C({n + 1},{(n + 1) // 2}) at n={n}",
            )
        vertices = standard_simplex_vertices(n)
        target = math.sqrt(width_squared(n, SimplexKind.STANDARD))
        for direction in family:
            if abs(projection_width(direction, vertices) - target) > 1e-12:
                return CheckResult(name, False, f"achievement fails at n={n}")
    return CheckResult(
        name,
        True,
        f"odd n<={odd_max_n}, even n<={even_max_n}: families achieve the width",
    )


def energy_fuzz(trials: int, seed: int) -> tuple[int, int]:
    """Random moved-coordinate instances satisfying the strict-growth
    hypothesis; returns (trials run, violations observed).

    Coordinates are i.i.d. uniform on [-10, 10] with dimension uniform
    on [2, 50]. The move size is kept at least 1e-3 so that a true
    strict increase can never be swallowed by the float verdict gap.
    """
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    violations = 0
    for _ in range(trials):
        dim = int(rng.integers(2, 51))
        coords = rng.uniform(-10.0, 10.0, dim)
        v = Vector(tuple(coords))
        i = int(rng.integers(dim))
        mean = math.fsum(v.coords) / dim
        delta = float(rng.uniform(1e-3, 10.0))
        if v.coords[i] >= mean:
            new_value = v.coords[i] + delta
        else:
            new_value = v.coords[i] - delta
        _, _, increased = energy_push(v, i, new_value)
        if not increased:
            violations += 1
    return trials, violations


def check_energy_fuzz(seed: int, trials: int = FUZZ_TRIALS) -> CheckResult:
    name = "energy-fuzz"
    ran, violations = energy_fuzz(trials, seed)
    if violations:
        return CheckResult(name, False, f"{violations} of {ran} instances failed")
    return CheckResult(name, True, f"{ran} instances, zero violations")


def check_optimizer_agreement(
    max_n: int = OPTIMIZER_MAX_N, seed: int = 0, restarts: int = 64
) -> CheckResult:
    """Subgradient descent rediscovers the closed-form width of the
    standard simplex within 1e-6 relative, never undershooting it by
    more than 1e-9, and lands in the optimal family."""
    name = "optimizer-agreement"
    for n in range(1, max_n + 1):
        cfg = OptimizerConfig(
            restarts=restarts,
            seed=derive_seed(seed, n),
            constrain_sum_zero=True,
        )
        result = minimize_width(standard_simplex_vertices(n), cfg)
        target = math.sqrt(width_squared(n, SimplexKind.STANDARD))
        if abs(result.width - target) > 1e-6 * target:
            return CheckResult(
                name, False, f"width {result.width!r} vs {target!r} at n={n}"
            )
        if result.width < target - 1e-9:
            return CheckResult(name, False, f"upper bound violated at n={n}")
        if not is_optimal_direction(n, result.direction):
            return CheckResult(name, False, f"direction outside family at n={n}")
    return CheckResult(name, True, f"n=1..{max_n}: closed form rediscovered")


def run_all_checks(max_n: int, seed: int) -> list[CheckResult]:
    """The full verification battery, bounded by ``max_n`` per check."""
    return [
        check_exact_identities(min(max_n, EXACT_MAX_N)),
        check_radii_distances(min(max_n, RADII_MAX_N)),
        check_enumeration_oracle(min(max_n, EXACT_MAX_N)),
        check_direction_families(
            min(max_n, ODD_FAMILY_MAX_N), min(max_n, EVEN_FAMILY_MAX_N)
        ),
        check_energy_fuzz(seed),
        check_optimizer_agreement(min(max_n, OPTIMIZER_MAX_N), seed),
    ]
