from fractions import Fraction

import pytest

from errors import DivergentLimitError, InvalidSubstitutionError, NonPolynomialResultError, ParseError, PoleError, SingularParameterError
from exact import RatFunc, UniPoly, common_denominator, format_rational, limit_at_infinity, parse_rational, pfq_terminating, pochhammer, ratfunc_apply

X = UniPoly.x()


@pytest.mark.parametrize("text, expected", [("-15/32", Fraction(-15, 32)), ("3", Fraction(3)), (" 4/6 ", Fraction(2, 3)), ("+1/2", Fraction(1, 2))])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "0.5", "a/b", "", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(0)) == "0"


def test_unipoly_arithmetic():
    p = (X - 1) * (X + 1)
    assert p == UniPoly((-1, 0, 1))
    assert p.degree == 2 and p.is_monic()
    assert UniPoly().degree == -1
    assert (p - p).is_zero()
    assert p(Fraction(1, 2)) == Fraction(-3, 4)
    assert (X + 2) ** 3 == UniPoly((8, 12, 6, 1))


def test_unipoly_division():
    quotient, remainder = (X ** 3 + 1).divmod(X + 1)
    assert quotient == UniPoly((1, -1, 1))
    assert remainder.is_zero()
    _, remainder = (X ** 2 + 1).divmod(X - 1)
    assert remainder == UniPoly.constant(2)
    assert ((X - 1) * (X + 2)).gcd((X - 1) * (X - 3)) == X - 1


def test_affine_substitute():
    p = X ** 2 + X
    assert p.affine_substitute(2, 1) == (2 * X + 1) ** 2 + (2 * X + 1)
    assert p.affine_substitute(-1, 0) == X ** 2 - X
    with pytest.raises(InvalidSubstitutionError):
        p.affine_substitute(0, 1)


def test_ratfunc_normal_form():
    r = RatFunc(X ** 2 - 1, X - 1)
    assert r.is_polynomial()
    assert r.num == X + 1
    s = RatFunc(X, 2 * X + 2)
    assert s.den == X + 1
    assert s.num == X.scale(Fraction(1, 2))
    assert RatFunc(X, X) == RatFunc.constant(1)
    assert RatFunc(UniPoly(), X + 5).den == UniPoly.constant(1)


def test_ratfunc_arithmetic():
    x = RatFunc.x()
    r = 1 / x + 1 / (x + 1)
    assert r == RatFunc(2 * X + 1, X * (X + 1))
    assert (r - 1 / x) * (x + 1) == RatFunc.constant(1)
    assert r(Fraction(1)) == Fraction(3, 2)


def test_ratfunc_pole():
    with pytest.raises(PoleError) as info:
        (1 / RatFunc.x())(Fraction(0))
    assert info.value.point == 0


def test_ratfunc_apply():
    assert ratfunc_apply(1 / RatFunc(X - 1), X ** 2 - 1) == X + 1
    with pytest.raises(NonPolynomialResultError):
        ratfunc_apply(1 / RatFunc(X - 1), X ** 2 + 1)


def test_pochhammer():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(Fraction(7), 0) == 1
    assert pochhammer(-2, 3) == 0
    assert pochhammer(X, 2) == X * (X + 1)


def test_pfq_chu_vandermonde():
    n, b, c = 3, Fraction(1, 2), Fraction(5, 3)
    assert pfq_terminating([-n, b], [c]) == pochhammer(c - b, n) / pochhammer(c, n)


def test_pfq_polynomial_parameter():
    assert pfq_terminating([-1, X], [1]) == 1 - X


def test_pfq_singular_lower_parameter():
    with pytest.raises(SingularParameterError):
        pfq_terminating([-3, 1], [-1])


def test_pfq_requires_termination():
    with pytest.raises(ValueError):
        pfq_terminating([Fraction(1, 2), 1], [2])


def test_limit_at_infinity():
    assert limit_at_infinity(2 * X + 1, X - 3) == 2
    assert limit_at_infinity(UniPoly.constant(1), X) == 0
    with pytest.raises(DivergentLimitError):
        limit_at_infinity(X ** 2, X)


def test_rational_coefficient_gcd_and_lcm():
    p = (X - Fraction(1, 3)) * (X + Fraction(5, 2))
    assert UniPoly.from_sympy(p.to_sympy()) == p
    assert UniPoly.from_sympy(UniPoly().to_sympy()).is_zero()
    assert (X - Fraction(1, 3)).scale(6).gcd(p) == X - Fraction(1, 3)
    assert p.lcm(X - 1) == p * (X - 1)
    r = RatFunc(p.scale(4), (X - Fraction(1, 3)).scale(2))
    assert r.is_polynomial()
    assert r.num == (X + Fraction(5, 2)).scale(2)


def test_common_denominator():
    functions = [RatFunc(UniPoly.constant(1), X - 1), RatFunc(X, (X - 1) * (X + 2)), RatFunc.constant(3)]
    assert common_denominator(functions) == (X - 1) * (X + 2)
