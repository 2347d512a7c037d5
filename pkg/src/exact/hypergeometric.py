#!/usr/bin/env python
from fractions import Fraction
from typing import Any, Sequence

from errors import DivergentLimitError, SingularParameterError
from exact.scalar import format_rational
from exact.uni_poly import UniPoly


def _terminating_index(numerators: Sequence[Any]) -> int:
    # The series stops at the first vanishing numerator Pochhammer.
    candidates = [
        -int(a) for a in numerators
        if isinstance(a, (int, Fraction)) and Fraction(a).denominator == 1 and a <= 0
    ]
    if not candidates:
        raise ValueError("Terminating series needs a numerator parameter equal to a nonpositive integer")
    return min(candidates)


def pfq_terminating(numerators: Sequence[Any], denominators: Sequence[Any], argument: Any = 1) -> Any:
    """
    Terminating generalized hypergeometric sum pFq(numerators; denominators; argument).

    Numerator parameters may be polynomials (for instance rho2 + x), in which
    case the result is a polynomial in x. Denominator parameters must be
    rational scalars.

    Args:
        numerators: Upper parameters, one of which is a nonpositive integer -n
        denominators: Lower rational parameters
        argument: The series argument

    Returns:
        The exact finite sum over k = 0..n

    Raises:
        SingularParameterError: If a lower Pochhammer vanishes inside the summation range
    """
    n = _terminating_index(numerators)
    term: Any = Fraction(1)
    total: Any = Fraction(1)
    for k in range(n):
        for b in denominators:
            if b + k == 0:
                raise SingularParameterError(
                    f"Lower parameter {format_rational(b)} gives a zero Pochhammer at k = {k + 1}", n=k + 1
                )
        upper: Any = Fraction(1)
        for a in numerators:
            upper = upper * (a + k)
        lower = Fraction(k + 1)
        for b in denominators:
            lower *= b + k
        term = term * upper * (Fraction(argument) / lower)
        total = total + term
    return total


def limit_at_infinity(num: UniPoly, den: UniPoly) -> Fraction:
    """
    Limit of num(t)/den(t) as t grows without bound.

    Raises:
        DivergentLimitError: If deg(num) > deg(den)
    """
    if den.is_zero():
        raise ZeroDivisionError("Limit of a quotient with zero denominator")
    if num.degree > den.degree:
        raise DivergentLimitError(
            f"Numerator degree {num.degree} exceeds denominator degree {den.degree}; the limit diverges"
        )
    if num.degree < den.degree:
        return Fraction(0)
    return num.leading / den.leading
