#!/usr/bin/env python
"""
Seeded random rational parameter draws for the generic-parameter suites.

Numerators satisfy |p| <= 12 and denominators 1 <= q <= 12. A draw is
rejected when twice any of the combinations that enter a recurrence
denominator, a hypergeometric lower parameter or a five-term grid pole is
an integer, which keeps every generic suite off the singular set.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Tuple

import numpy as np

from models.param_set import DualHahnParams, ParamSet

BOUND = 12
MAX_ATTEMPTS = 10_000


def random_rational(rng: np.random.Generator, bound: int = BOUND) -> Fraction:
    numerator = int(rng.integers(-bound, bound + 1))
    denominator = int(rng.integers(1, bound + 1))
    return Fraction(numerator, denominator)


def _half_integral(values: Iterable[Fraction]) -> bool:
    return any((2 * v).denominator == 1 for v in values)


def is_generic(params: ParamSet) -> bool:
    rho1, rho2, r1, r2 = params.rho1, params.rho2, params.r1, params.r2
    return not _half_integral([
        params.g,
        rho1 + rho2,
        rho1 - r1,
        rho1 - r2,
        rho2 - r1,
        rho2 - r2,
        r1 + r2,
        rho2,
        r1,
        r2,
    ])


def random_param_set(rng: np.random.Generator) -> ParamSet:
    for _ in range(MAX_ATTEMPTS):
        params = ParamSet(*(random_rational(rng) for _ in range(4)))
        if is_generic(params):
            return params
    raise RuntimeError(f"No generic parameter set found in {MAX_ATTEMPTS} draws")


def random_param_sets(seed: int, count: int) -> List[ParamSet]:
    rng = np.random.default_rng(seed)
    draws = [random_param_set(rng) for _ in range(count)]
    logging.info(f"Drew {count} generic parameter sets with seed {seed}: {', '.join(str(p) for p in draws)}")
    return draws


def random_alphas(seed: int, count: int) -> List[Fraction]:
    rng = np.random.default_rng(seed + 1)
    return [random_rational(rng) for _ in range(count)]


def random_dual_hahn_params(seed: int, count: int) -> List[DualHahnParams]:
    rng = np.random.default_rng(seed)
    draws: List[DualHahnParams] = []
    while len(draws) < count:
        rho2, r1, r2 = (random_rational(rng) for _ in range(3))
        if not _half_integral([rho2, r1, r2, rho2 - r1, rho2 - r2, r1 + r2]):
            draws.append(DualHahnParams(rho2, r1, r2))
    return draws


def random_draws(seed: int, count: int, alphas_per_set: int = 1) -> List[Tuple[ParamSet, Fraction]]:
    """Pairs (ParamSet, alpha), alphas_per_set of them for each parameter set."""
    params = random_param_sets(seed, count)
    alphas = random_alphas(seed, count * alphas_per_set)
    return [(p, alphas[i * alphas_per_set + j]) for i, p in enumerate(params) for j in range(alphas_per_set)]
