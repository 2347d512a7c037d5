from fractions import Fraction

import numpy as np
import pytest

from errors import ConditioningError, DomainError
from models.param_set import AWParams, ParamSet
from askey_wilson import (
    aw_normalized,
    aw_polynomial,
    aw_recurrence_coeffs,
    aw_recurrence_residuals,
    random_points,
    require_aw_limit,
    verify_aw_limit,
)

AW = AWParams(0.5, 0.3, 0.2, -0.1, 0.9)
POINT = 1.3 + 0.2j


def test_recurrence_residuals():
    assert np.allclose(aw_recurrence_residuals(AW, POINT, 6), 0.0, atol=1e-9)


def test_first_step_identity():
    alpha0, gamma0 = aw_recurrence_coeffs(AW, 0)
    assert gamma0 == 0
    for z in random_points(3, 5):
        lhs = alpha0 * (aw_normalized(AW, z, 1) - 1)
        rhs = z + 1 / z - AW.a - 1 / AW.a
        assert np.isclose(lhs, rhs, rtol=1e-10, atol=1e-10)


def test_degree_zero():
    assert aw_polynomial(AW, POINT, 0) == 1
    assert aw_normalized(AW, POINT, 0) == 1


def test_random_points_are_deterministic():
    assert random_points(5, 4) == random_points(5, 4)
    assert all(z.imag > 0 for z in random_points(5, 4))


@pytest.mark.parametrize(
    "params",
    [
        ParamSet(1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)),
        ParamSet(Fraction(2, 3), Fraction(-5, 7), Fraction(3, 11), Fraction(7, 5)),
    ],
)
def test_limit_converges_first_order(params):
    report = verify_aw_limit(params)
    assert report.passed, report.failures
    assert len(report.rows) == 7 * 3 * 2
    ratios = [row.ratio for row in report.rows if row.ratio is not None]
    assert ratios and all(5.0 <= r <= 20.0 for r in ratios)


@pytest.mark.parametrize("eps", [(1e-4, 1e-3), (1e-3, 0.0), ()])
def test_limit_rejects_bad_eps(reference_params, eps):
    with pytest.raises(DomainError):
        verify_aw_limit(reference_params, eps_list=eps)


def test_conditioning_guard():
    singular = AWParams(2.0, 0.5, 0.2, -0.1, 0.9)
    with pytest.raises(ConditioningError):
        aw_normalized(singular, POINT, 1)


def test_require_aw_limit_returns_report(reference_params):
    report = require_aw_limit(reference_params, n_max=3)
    assert report.to_dict()["passed"]
    assert report.to_dict()["eps"] == [1e-3, 1e-4, 1e-5]
