from fractions import Fraction

import pytest

from errors import SingularParameterError
from exact import UniPoly
from models.param_set import ParamSet
from cbi_family import (
    bi_coefficients,
    bi_polynomial,
    bi_table,
    cbi_closed_form,
    cbi_polynomial,
    cbi_table,
    cbi_tau,
    christoffel_transform,
    geronimus_reconstruct,
    kernel_ratio,
    kernel_round_trip,
    parity_residual,
)

X = UniPoly.x()


def test_bi_coefficients_reference(reference_params):
    a0, c0 = bi_coefficients(reference_params, 0)
    assert a0 == Fraction(25, 32)
    assert c0 == 0


def test_bi_coefficients_singular():
    # g = -1 makes 4(n + g + 1) vanish at n = 0.
    params = ParamSet(0, 0, Fraction(1, 2), Fraction(1, 2))
    assert params.g == -1
    with pytest.raises(SingularParameterError) as info:
        bi_coefficients(params, 0)
    assert info.value.n == 0


def test_bi_polynomial_low_degrees(reference_params):
    assert bi_polynomial(reference_params, 0) == UniPoly.constant(1)
    a0, _ = bi_coefficients(reference_params, 0)
    assert bi_polynomial(reference_params, 1) == X - reference_params.rho1 + a0
    assert bi_polynomial(reference_params, 1) == X - Fraction(7, 32)


def test_cbi_tau_reference(reference_params):
    assert cbi_tau(reference_params, 0) == 0
    assert cbi_tau(reference_params, 1) == Fraction(-15, 32)


def test_cbi_tau_vanishes_on_even_truncation():
    params = ParamSet(Fraction(2, 3), Fraction(1, 5), Fraction(3, 2), Fraction(5, 2))
    assert cbi_tau(params, 8) == 0


def test_cbi_polynomial_reference(reference_params):
    assert cbi_polynomial(reference_params, 0) == UniPoly.constant(1)
    assert cbi_polynomial(reference_params, 1) == X - Fraction(1, 2)
    assert cbi_polynomial(reference_params, 2) == X ** 2 + Fraction(7, 32)


def test_tables_are_monic(reference_params):
    table = cbi_table(reference_params, 6)
    assert len(table) == 7
    assert all(p.is_monic() and p.degree == n for n, p in enumerate(table.entries))
    assert table.to_rows()[1] == ["-1/2", "1"]
    assert bi_table(reference_params, 0).to_rows() == [["1"]]


def test_table_json_shape(reference_params):
    data = cbi_table(reference_params, 2).to_dict()
    assert data["family"] == "cbi"
    assert data["polys"][:2] == [["1"], ["-1/2", "1"]]
    assert data["params"]["g"] == "1"


def test_christoffel_geronimus(reference_params):
    assert christoffel_transform(reference_params, 0) == UniPoly.constant(1)
    assert christoffel_transform(reference_params, 1) == X - Fraction(1, 2)
    assert geronimus_reconstruct(reference_params, 1) == bi_polynomial(reference_params, 1)


def test_kernel_ratio_is_a_n(reference_params):
    for n in range(4):
        assert kernel_ratio(reference_params, n) == bi_coefficients(reference_params, n)[0]


def test_kernel_round_trip(generic_params):
    for params in generic_params:
        assert kernel_round_trip(params, 12) == ()


def test_closed_form_matches_recurrence(reference_params, generic_params):
    for params in [reference_params] + list(generic_params):
        for n in range(9):
            assert cbi_closed_form(params, n) == cbi_polynomial(params, n), f"n = {n} at {params}"


@pytest.mark.parametrize("n", range(8))
def test_parity_relation(generic_params, n):
    for params in generic_params:
        assert parity_residual(params, n).is_zero()
