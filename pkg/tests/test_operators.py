from fractions import Fraction

import pytest

from errors import GridPoleError, NonPolynomialResultError
from exact import RatFunc, UniPoly
from models.param_set import ParamSet
from cbi_family import cbi_polynomial, cbi_table
from operators import (
    ShiftReflectOp,
    alternate_grid,
    anticommutator,
    bi_grid,
    build_D_alpha,
    build_U,
    commutator,
    eigenvalue_kappa,
    eigenvalue_lambda,
    five_term_apply,
    hidden_alpha,
)
from operators.dunkl import pointwise_action, verify_eigen, verify_hidden, verify_hidden_identity, verify_kappa
from operators.grid import expected_action_table, grid_action_table

X = UniPoly.x()
MULTIPLY_X = ShiftReflectOp.multiplication(X)


def test_normal_form_drops_zero_terms():
    op = ShiftReflectOp({(1, False): RatFunc.x(), (0, True): RatFunc.constant(0)})
    assert list(op.keys()) == [(Fraction(1), False)]
    assert (op - op).is_zero()


def test_shift_and_reflection_actions():
    assert ShiftReflectOp.shift(1).apply(X ** 2) == (X + 1) ** 2
    assert ShiftReflectOp.reflection().apply(X ** 3) == -(X ** 3)
    assert (ShiftReflectOp.reflection() @ ShiftReflectOp.reflection()) == ShiftReflectOp.identity()


def test_commutator_with_position():
    shift = ShiftReflectOp.shift(1)
    assert commutator(MULTIPLY_X, shift) == -shift
    assert anticommutator(MULTIPLY_X, ShiftReflectOp.reflection()).is_zero()


def test_conjugation_by_shift():
    op = MULTIPLY_X.conjugate_by_shift(Fraction(1, 4))
    assert op == ShiftReflectOp.multiplication(X + Fraction(1, 4))


def test_non_polynomial_image():
    op = ShiftReflectOp.multiplication(1 / RatFunc.x())
    with pytest.raises(NonPolynomialResultError):
        op.apply(UniPoly.constant(1))


def test_d_alpha_term_layout(reference_params):
    keys = set(build_D_alpha(reference_params, Fraction(2, 3)).keys())
    expected = {(Fraction(1), False), (Fraction(-1), False), (Fraction(0), True), (Fraction(1), True), (Fraction(0), False)}
    assert keys == expected


def test_eigenvalues(reference_params):
    alpha = Fraction(2, 3)
    assert eigenvalue_lambda(reference_params, alpha, 0) == 0
    assert eigenvalue_lambda(reference_params, alpha, 1) == alpha
    assert eigenvalue_lambda(reference_params, alpha, 2) == reference_params.g + 2
    assert hidden_alpha(reference_params) == Fraction(17, 4)
    assert eigenvalue_kappa(reference_params, 1) == Fraction(17, 4)


def test_eigen_equation_reference(reference_params):
    for alpha in (Fraction(0), Fraction(2, 3)):
        report = verify_eigen(reference_params, alpha, 12)
        assert report.passed, report.to_dict()


def test_eigen_equation_generic(generic_draws):
    for params, alpha in generic_draws:
        assert verify_eigen(params, alpha, 10).passed


def test_hidden_operator(generic_params):
    for params in generic_params:
        assert verify_hidden(params, 8).passed
        assert build_U(params).apply(cbi_polynomial(params, 3)) == cbi_polynomial(params, 3)
        assert build_U(params).apply(cbi_polynomial(params, 4)).is_zero()


@pytest.mark.parametrize("params", [
    ParamSet(1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)),
    ParamSet(Fraction(2, 3), Fraction(-5, 7), Fraction(3, 11), Fraction(7, 5)),
])
def test_y_operator_spectrum_and_conjugation(params):
    assert verify_kappa(params, 6).passed
    assert verify_hidden_identity(params)


def test_grids():
    h = Fraction(1, 3)
    assert bi_grid(h, 0) == h
    assert bi_grid(h, 1) == Fraction(-4, 3)
    assert alternate_grid(h, 0) == h - Fraction(1, 2)
    assert alternate_grid(h, 1) == Fraction(1, 2) - h


@pytest.mark.parametrize("k", range(-3, 4))
def test_grid_neighbours(k):
    assert grid_action_table(bi_grid, Fraction(2, 7), k) == expected_action_table(k)


def test_five_term_both_grids(generic_draws):
    for params, alpha in generic_draws:
        table = cbi_table(params, 8)
        standard = five_term_apply(params, alpha, table, params.rho2, range(-6, 7), "standard")
        alternate = five_term_apply(params, alpha, table, params.r1, range(-6, 7), "alternate")
        assert standard.passed, standard.to_dict()
        assert alternate.passed, alternate.to_dict()


def test_five_term_pole_on_grid(reference_params):
    # h = 0 puts x_0 = 0 on the pole of the T^- coefficient.
    with pytest.raises(GridPoleError):
        five_term_apply(reference_params, 0, cbi_table(reference_params, 2), 0, range(0, 1))


def test_pointwise_action_matches_normal_form(reference_params):
    op = build_D_alpha(reference_params, Fraction(1, 3))
    poly = cbi_polynomial(reference_params, 5)
    image = op.apply(poly)
    for x in (Fraction(2), Fraction(-7, 3), Fraction(5, 11)):
        assert pointwise_action(op, poly, x) == image(x)
