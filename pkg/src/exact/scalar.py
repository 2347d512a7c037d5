#!/usr/bin/env python
import re
from fractions import Fraction
from typing import Any, Union

from errors import ParseError

ScalarLike = Union[int, Fraction, str]

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational literal of the form "p/q" or "p".

    Args:
        text: The literal, e.g. "-15/32" or "3"

    Returns:
        The exact value

    Raises:
        ParseError: If the text is not a rational literal or q is zero
    """
    match = _RATIONAL_LITERAL.match(text)
    if match is None:
        raise ParseError(f"Not a rational literal (expected p/q): {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"Zero denominator in rational literal: {text!r}")
    return Fraction(numerator, denominator)


def to_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"Boolean is not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParseError(f"Cannot convert {type(value).__name__} to an exact scalar")


def format_rational(value: Fraction) -> str:
    """Format as "p/q", dropping the denominator when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integer(value: Fraction) -> bool:
    return Fraction(value).denominator == 1


def pochhammer(a: Any, n: int) -> Any:
    """
    Rising factorial (a)_n = a(a+1)...(a+n-1).

    Works for any value supporting addition of integers and multiplication,
    so polynomial and rational-function arguments are accepted as well.

    Args:
        a: Base value
        n: Nonnegative length of the product

    Returns:
        The product; Fraction(1) when n == 0
    """
    if n < 0:
        raise ValueError(f"Pochhammer length must be nonnegative, got {n}")
    result: Any = Fraction(1)
    for j in range(n):
        result = result * (a + j)
    return result
