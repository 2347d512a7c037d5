from fractions import Fraction

import pytest

from models.param_set import ParamSet
from exact import UniPoly
from cbi_algebra import (
    RELATION_NAMES,
    alpha_shift_check,
    casimir_operator,
    casimir_scalar,
    generators,
    structure_constants,
    verify_cbi_relations,
)
from operators import build_D_alpha, commutator

GENERIC = ParamSet(Fraction(2, 3), Fraction(-5, 7), Fraction(3, 11), Fraction(7, 5))


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(2, 3)])
def test_relations_at_reference(reference_params, alpha):
    report = verify_cbi_relations(reference_params, alpha)
    assert report.passed
    assert [c.name for c in report.checks] == list(RELATION_NAMES)
    assert all(c.normal_form_pass for c in report.checks)
    assert report.warnings == ()


def test_relations_generic(generic_draws):
    for params, alpha in generic_draws:
        assert verify_cbi_relations(params, alpha, max_degree=12).passed


def test_generators_commute_into_k3(reference_params):
    ops = generators(reference_params, Fraction(1, 3))
    assert commutator(ops["K1"], ops["K2"]) == ops["K3"]
    assert ops["K1"] == build_D_alpha(reference_params, Fraction(1, 3))


@pytest.mark.parametrize(
    "params, alpha, expected",
    [
        (ParamSet(1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)), Fraction(0), Fraction(-1)),
        (ParamSet(1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)), Fraction(2, 3), Fraction(-19, 48)),
        (GENERIC, Fraction(-3, 4), Fraction(361421, 2134440)),
    ],
)
def test_casimir_scalar(params, alpha, expected):
    assert casimir_scalar(params, alpha) == expected
    q_op = casimir_operator(params, alpha)
    assert q_op.apply(UniPoly.x() ** 3) == expected * UniPoly.x() ** 3


def test_structure_constants_reference(reference_params):
    d = structure_constants(reference_params, 0)
    assert d.d1 == 0
    assert d.d3 == reference_params.rho2
    assert d.d2 == reference_params.g + Fraction(3, 2)


@pytest.mark.parametrize("beta", [Fraction(1, 2), Fraction(-7, 3)])
def test_alpha_shift(beta):
    result = alpha_shift_check(GENERIC, Fraction(1, 5), beta)
    assert result["passed"]
    assert result["checks"]["d1~ corrected"]
    assert not result["constants"]["d1"]["stated_matches"]
    assert result["constants"]["d3"]["stated_matches"]
