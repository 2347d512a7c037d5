#!/usr/bin/env python
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List

from errors import NonPolynomialResultError, PoleError
from exact.scalar import format_rational
from exact.uni_poly import UniPoly


@dataclass(frozen=True)
class RatFunc:
    """
    Reduced quotient num/den of two polynomials.

    The denominator is monic and coprime to the numerator; zero is 0/1.
    Because of this normal form, equality is plain field equality.
    """
    num: UniPoly
    den: UniPoly = UniPoly((Fraction(1),))

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("Rational function with zero denominator")
        if num.is_zero():
            den = UniPoly.constant(1)
        elif den.degree > 0:
            num_poly, den_poly = num.to_sympy().cancel(den.to_sympy(), include=True)
            num, den = UniPoly.from_sympy(num_poly), UniPoly.from_sympy(den_poly)
        lead = den.leading
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(UniPoly.x())

    @classmethod
    def constant(cls, value: Any) -> "RatFunc":
        return cls(UniPoly.constant(value))

    @staticmethod
    def _coerce(other: Any) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFunc(UniPoly.constant(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"Rational function {self} is not constant")
        return self.num.constant_term()

    def __add__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __call__(self, point: Any) -> Any:
        """
        Evaluate at a point.

        Raises:
            PoleError: If the denominator vanishes at a scalar point
        """
        den_value = self.den(point)
        if isinstance(den_value, (int, Fraction)) and den_value == 0:
            raise PoleError(f"Pole of {self} at x = {format_rational(point)}", point=point)
        return self.num(point) / den_value

    def affine_substitute(self, a: Any, b: Any) -> "RatFunc":
        """Return r(a*x + b)."""
        return RatFunc(self.num.affine_substitute(a, b), self.den.affine_substitute(a, b))

    def to_json(self) -> dict:
        return {"num": self.num.to_strings(), "den": self.den.to_strings()}

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


def ratfunc_apply(r: RatFunc, p: UniPoly) -> UniPoly:
    """
    Multiply a polynomial by a rational function, requiring an exact result.

    Raises:
        NonPolynomialResultError: If the denominator does not divide num * p
    """
    quotient, remainder = (r.num * p).divmod(r.den)
    if not remainder.is_zero():
        raise NonPolynomialResultError(
            f"({r}) * ({p}) is not a polynomial; remainder {remainder}", remainder=remainder
        )
    return quotient


def common_denominator(functions: List[RatFunc]) -> UniPoly:
    """Monic least common multiple of the denominators."""
    result = UniPoly.constant(1)
    for f in functions:
        if f.den.degree <= 0:
            continue
        result = result.lcm(f.den)
    return result.monic()
