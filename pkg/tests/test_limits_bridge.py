from fractions import Fraction

import pytest

from errors import DomainError, SingularParameterError
from models.param_set import DualHahnParams, ParamSet
from limits_bridge import (
    alternate_symmetric_hahn,
    aw_limit_coeffs,
    dual_hahn_algebra_check,
    dual_hahn_recurrence_residual,
    dual_m1_hahn_poly,
    dual_m1_hahn_recurrence_poly,
    eigenvalue_nu,
    monic_product_failures,
    para_krawtchouk_check,
    para_krawtchouk_params,
    symmetric_hahn_reduction,
    verify_dual_hahn_eigen,
    verify_dual_hahn_limit,
)

DUAL = DualHahnParams(Fraction(1, 3), Fraction(2, 7), Fraction(-3, 5))


def test_dual_hahn_limit():
    result = verify_dual_hahn_limit(DUAL, Fraction(1, 2), n_max=10)
    assert result["passed"]


def test_dual_hahn_limit_needs_enough_samples():
    with pytest.raises(DomainError):
        verify_dual_hahn_limit(DUAL, 0, x_samples=(2, 3))


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(-4, 9)])
def test_dual_hahn_eigen(alpha):
    assert verify_dual_hahn_eigen(DUAL, alpha, 12) == []


def test_dual_hahn_hypergeometric_form():
    for n in range(8):
        assert dual_m1_hahn_poly(DUAL, n) == dual_m1_hahn_recurrence_poly(DUAL, n)
        assert dual_hahn_recurrence_residual(DUAL, n).is_zero()


def test_eigenvalue_nu():
    assert [eigenvalue_nu(Fraction(1, 3), n) for n in range(4)] == [0, Fraction(1, 3), 1, Fraction(4, 3)]


def test_dual_hahn_algebra():
    assert dual_hahn_algebra_check(DUAL, Fraction(2, 5), max_degree=10)["passed"]


def test_symmetric_hahn_reduction():
    report = symmetric_hahn_reduction(Fraction(2, 7), Fraction(3, 5))
    assert report["passed"]
    assert report["d1"]["corrected_matches"]
    assert not report["d1"]["stated_matches"]


def test_symmetric_hahn_truncated():
    report = symmetric_hahn_reduction(0, Fraction(3, 5), N=4)
    assert report["passed"]
    assert report["N"] == 4
    assert len(report["omega"]) == 5
    assert report["omega"][-1] == "0"


@pytest.mark.parametrize("vanishing", ["r1", "r2"])
def test_alternate_symmetric_hahn(vanishing):
    assert alternate_symmetric_hahn(Fraction(5, 4), Fraction(1, 3), vanishing)["passed"]


def test_alternate_symmetric_hahn_bad_choice():
    with pytest.raises(DomainError):
        alternate_symmetric_hahn(1, 1, "rho2")


@pytest.mark.parametrize("N", [1, 3, 5])
def test_para_krawtchouk(N):
    result = para_krawtchouk_check(N, Fraction(1, 3))
    assert result["passed"]
    assert result["symmetric"] and result["truncated"]


def test_para_krawtchouk_needs_odd_size():
    with pytest.raises(DomainError):
        para_krawtchouk_params(4, 0)


def test_monic_product(reference_params, generic_params):
    assert monic_product_failures(reference_params) == []
    for params in generic_params:
        assert monic_product_failures(params, 12) == []


def test_limit_coefficients_singular():
    with pytest.raises(SingularParameterError):
        aw_limit_coeffs(ParamSet(0, 0, Fraction(1, 2), Fraction(1, 2)), 0)
