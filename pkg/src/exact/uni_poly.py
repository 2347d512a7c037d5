#!/usr/bin/env python
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Tuple, Union

import sympy
from sympy import QQ

from errors import InvalidSubstitutionError
from exact.scalar import format_rational

Coefficient = Union[int, Fraction]
X_SYMBOL = sympy.Symbol("x")


@dataclass(frozen=True)
class UniPoly:
    """
    Dense univariate polynomial over the rationals.

    Coefficients are stored in ascending degree order with trailing zeros
    trimmed, so the zero polynomial is the empty tuple and equality of two
    polynomials is equality of their coefficient tuples.
    """
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        values = [Fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, value: Coefficient) -> "UniPoly":
        return cls((Fraction(value),))

    @classmethod
    def monomial(cls, degree: int, value: Coefficient = 1) -> "UniPoly":
        return cls(tuple([Fraction(0)] * degree + [Fraction(value)]))

    @classmethod
    def from_roots(cls, roots: Iterable[Coefficient]) -> "UniPoly":
        result = cls.constant(1)
        for root in roots:
            result = result * cls((-Fraction(root), Fraction(1)))
        return result

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @staticmethod
    def _coerce(other: Any) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return UniPoly.constant(other)
        return NotImplemented

    def __add__(self, other: Any) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        left = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        right = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return UniPoly(tuple(a + b for a, b in zip(left, right)))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        product: List[Fraction] = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return UniPoly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("Negative powers of a polynomial are not polynomials")
        result = UniPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Coefficient) -> "UniPoly":
        factor = Fraction(factor)
        return UniPoly(tuple(c * factor for c in self.coeffs))

    def __call__(self, point: Any) -> Any:
        """Evaluate with Horner's scheme; the point may be any ring element."""
        result: Any = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def affine_substitute(self, a: Coefficient, b: Coefficient) -> "UniPoly":
        """Return q with q(x) = p(a*x + b)."""
        a = Fraction(a)
        if a == 0:
            raise InvalidSubstitutionError("Affine substitution requires a nonzero slope")
        inner = UniPoly((Fraction(b), a))
        result = UniPoly()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def to_sympy(self) -> sympy.Poly:
        values = [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)]
        return sympy.Poly.from_list(values or [0], X_SYMBOL, domain=QQ)

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "UniPoly":
        return cls(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())))

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        quotient, remainder = self.to_sympy().div(divisor.to_sympy())
        return UniPoly.from_sympy(quotient), UniPoly.from_sympy(remainder)

    def __floordiv__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over the rationals."""
        return UniPoly.from_sympy(self.to_sympy().gcd(other.to_sympy())).monic()

    def lcm(self, other: "UniPoly") -> "UniPoly":
        return UniPoly.from_sympy(self.to_sympy().lcm(other.to_sympy())).monic()

    def to_strings(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            text = format_rational(c)
            if k == 0:
                parts.append(text)
            elif k == 1:
                parts.append(f"{text}*x")
            else:
                parts.append(f"{text}*x^{k}")
        return " + ".join(parts)


def poly_affine_substitute(p: UniPoly, a: Coefficient, b: Coefficient) -> UniPoly:
    return p.affine_substitute(a, b)
