from fractions import Fraction

import pytest

from errors import DomainError, InadmissibleTruncationError, NotTruncatedError
from models.param_set import ParamSet
from models.truncation_case import BiTruncationTag, TruncationTag
from cbi_family import cbi_polynomial, cbi_tau
from exact import UniPoly
from spectral_orthogonality import (
    bi_truncated_params,
    classify_bi_truncation,
    classify_truncation,
    even_positive_tau,
    grid_weight_table,
    odd_positive_tau,
    positive_even_params,
    positive_odd_params,
    spectral_grid,
    truncated_params,
    verify_bi_orthogonality,
    verify_orthogonality,
)

TRIPLES = [
    (Fraction(1), Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(1, 2), Fraction(3)),
    (Fraction(1, 3), Fraction(2), Fraction(1)),
]


@pytest.mark.parametrize("triple", TRIPLES)
@pytest.mark.parametrize("N", [2, 4, 6])
def test_positive_even_orthogonality(triple, N):
    params = positive_even_params(*triple, N)
    case = classify_truncation(params, N)
    assert case.tag.is_even
    report = verify_orthogonality(case, params)
    assert report.passed
    assert report.gram_offdiag_max_abs == 0
    assert all(report.positivity)
    assert report.to_dict()["gram_offdiag_max_abs"] == "0"


@pytest.mark.parametrize("triple", TRIPLES)
@pytest.mark.parametrize("N", [3, 5])
def test_positive_odd_orthogonality(triple, N):
    params = positive_odd_params(*triple, N)
    case = classify_truncation(params, N)
    assert case.tag is TruncationTag.ODD_II
    report = verify_orthogonality(case, params)
    assert report.passed
    assert all(report.positivity)


def test_even_case_tag():
    params = positive_even_params(2, Fraction(1, 2), 3, 4)
    assert classify_truncation(params, 4).tag is TruncationTag.EVEN_1


@pytest.mark.parametrize("triple", TRIPLES)
def test_tau_closed_forms(triple):
    even = positive_even_params(*triple, 6)
    odd = positive_odd_params(*triple, 5)
    for n in range(1, 7):
        assert even_positive_tau(*triple, 6, n) == cbi_tau(even, n)
    for n in range(1, 6):
        assert odd_positive_tau(*triple, 5, n) == cbi_tau(odd, n)


def test_grid_is_root_set():
    params = positive_even_params(1, 1, 1, 4)
    case = classify_truncation(params, 4)
    grid = spectral_grid(case, params)
    assert len(set(grid)) == 5
    assert all(cbi_polynomial(params, 5)(x) == 0 for x in grid)
    assert UniPoly.from_roots(grid) == cbi_polynomial(params, 5)


@pytest.mark.parametrize("tag", list(TruncationTag))
def test_forced_truncation_cases(tag):
    N = 4 if tag.is_even else 5
    params = truncated_params(tag, N, seed=11)
    case = classify_truncation(params, N)
    assert case.tag is tag
    assert verify_orthogonality(case, params).passed


@pytest.mark.parametrize("tag", list(BiTruncationTag))
def test_bannai_ito_truncation_cases(tag):
    N = 4 if tag.is_even else 3
    params = bi_truncated_params(tag, N, seed=11)
    case = classify_bi_truncation(params, N)
    assert case.tag is tag
    assert verify_bi_orthogonality(case, params).passed


def test_not_truncated(reference_params):
    with pytest.raises(NotTruncatedError):
        classify_truncation(reference_params, 4)


def test_positive_parametrization_domain():
    with pytest.raises(DomainError):
        positive_even_params(1, 1, 1, 3)
    with pytest.raises(DomainError):
        positive_even_params(-1, 1, 1, 4)
    with pytest.raises(DomainError):
        positive_odd_params(1, 1, 1, 4)


def test_grid_weight_table():
    params = positive_odd_params(1, 1, 1, 3)
    rows = grid_weight_table(classify_truncation(params, 3), params)
    assert [row[0] for row in rows] == ["0", "1", "2", "3"]
    assert all(len(row) == 3 for row in rows)


@pytest.mark.parametrize("tag", [TruncationTag.ODD_I, TruncationTag.ODD_III])
@pytest.mark.parametrize("seed", [10, 22])
def test_forced_truncation_has_distinct_grid(tag, seed):
    params = truncated_params(tag, 5, seed=seed)
    case = classify_truncation(params, 5)
    assert len(set(spectral_grid(case, params))) == 6
    assert verify_orthogonality(case, params).passed


def test_inadmissible_even_truncation():
    with pytest.raises(InadmissibleTruncationError):
        classify_truncation(ParamSet(-3, 0, Fraction(1, 5), Fraction(-1, 5)), 4)


def test_inadmissible_bannai_ito_odd_truncation():
    with pytest.raises(InadmissibleTruncationError):
        classify_bi_truncation(ParamSet(-2, 0, Fraction(1, 5), Fraction(-1, 5)), 3)
