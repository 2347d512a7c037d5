from fractions import Fraction

import numpy as np
import pytest

from errors import PositivityError
from models.exact_matrix import ExactMatrix
from representations import dual_basis_structure, monic_rep_matrices, orthonormal_rep_check
from spectral_orthogonality import classify_truncation, positive_even_params, positive_odd_params, spectral_grid


def test_monic_representation_reference(reference_params):
    matrices = monic_rep_matrices(reference_params, Fraction(2, 3), 16)
    assert matrices["casimir"] == Fraction(-19, 48)
    assert matrices["K2"][1, 0] == 1
    assert matrices["K2"][0, 1] == Fraction(-15, 32)
    assert matrices["P"] == ExactMatrix.diagonal([(-1) ** n for n in range(16)])


def test_monic_representation_generic(generic_draws):
    for params, alpha in generic_draws:
        assert monic_rep_matrices(params, alpha, 8)["K1"].bandwidth() == 0


def test_monic_representation_rejects_tiny_size(reference_params):
    with pytest.raises(ValueError):
        monic_rep_matrices(reference_params, 0, 2)


@pytest.mark.parametrize(
    "params, N",
    [
        (positive_even_params(2, Fraction(1, 2), 3, 4), 4),
        (positive_even_params(1, 1, 1, 6), 6),
        (positive_odd_params(1, 1, 1, 3), 3),
        (positive_odd_params(Fraction(1, 3), 2, 1, 5), 5),
    ],
)
def test_orthonormal_spectrum(params, N):
    spectrum = spectral_grid(classify_truncation(params, N), params)
    report = orthonormal_rep_check(params, Fraction(1, 3), N + 1, spectrum)
    assert report["passed"]
    assert np.isclose(report["spectrum_error"], 0.0, atol=1e-9)
    assert report["a"][0] == 0.0


def test_orthonormal_needs_positive_tau(reference_params):
    with pytest.raises(PositivityError):
        orthonormal_rep_check(reference_params, 0, 16)


@pytest.mark.parametrize(
    "params, N, p_diagonal",
    [
        (positive_even_params(2, Fraction(1, 2), 3, 4), 4, ["1", "-1/9", "1/9", "-1/17", "1/17"]),
        (positive_odd_params(Fraction(1, 3), 2, 1, 3), 3, ["-1/5", "1/5", "-5/13", "5/13"]),
    ],
)
def test_dual_basis_structure(params, N, p_diagonal):
    result = dual_basis_structure(classify_truncation(params, N), params, Fraction(1, 3))
    assert result["passed"]
    assert result["k1_bandwidth"] == 2
    assert result["p_diagonal"] == p_diagonal


def test_dual_basis_blocks():
    even = positive_even_params(1, 1, 1, 4)
    result = dual_basis_structure(classify_truncation(even, 4), even, 0)
    assert result["p_blocks"] == [[0], [1, 2], [3, 4]]
    odd = positive_odd_params(1, 1, 1, 3)
    result = dual_basis_structure(classify_truncation(odd, 3), odd, 0)
    assert result["p_blocks"] == [[0, 1], [2, 3]]
