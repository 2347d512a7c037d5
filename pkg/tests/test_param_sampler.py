from fractions import Fraction

import numpy as np

from models.param_set import ParamSet
from param_sampler import (
    BOUND,
    is_generic,
    random_alphas,
    random_draws,
    random_dual_hahn_params,
    random_param_sets,
    random_rational,
)


def test_draws_are_seeded():
    assert random_param_sets(11, 4) == random_param_sets(11, 4)
    assert random_param_sets(11, 4) != random_param_sets(12, 4)
    assert random_alphas(3, 5) == random_alphas(3, 5)


def test_draws_are_generic():
    for params in random_param_sets(5, 20):
        assert is_generic(params)
        for value in (params.rho1, params.rho2, params.r1, params.r2):
            assert abs(value.numerator) <= BOUND and value.denominator <= BOUND


def test_reference_is_not_generic(reference_params):
    assert not is_generic(reference_params)
    assert is_generic(ParamSet(Fraction(2, 3), Fraction(-5, 7), Fraction(3, 11), Fraction(7, 5)))


def test_random_rational_range():
    rng = np.random.default_rng(0)
    values = [random_rational(rng, 3) for _ in range(50)]
    assert all(abs(v) <= 3 for v in values)


def test_random_draws_pairs():
    draws = random_draws(2, 3, alphas_per_set=2)
    assert len(draws) == 6
    assert draws[0][0] == draws[1][0]
    assert draws[0][1] == random_alphas(2, 6)[0]


def test_dual_hahn_draws():
    draws = random_dual_hahn_params(4, 5)
    assert len(draws) == 5
    assert all((2 * p.r1).denominator != 1 for p in draws)
