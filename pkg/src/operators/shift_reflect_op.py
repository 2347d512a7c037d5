#!/usr/bin/env python
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Iterator, List, Mapping, Tuple, Union

from errors import NonPolynomialResultError
from exact.rat_func import RatFunc, common_denominator
from exact.scalar import format_rational
from exact.uni_poly import UniPoly

TermKey = Tuple[Fraction, bool]
CoefficientLike = Union[RatFunc, UniPoly, Fraction, int]


def _as_ratfunc(value: CoefficientLike) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, UniPoly):
        return RatFunc(value)
    return RatFunc.constant(value)


def _image(key: TermKey) -> Tuple[int, Fraction]:
    """Slope and offset of the point map x -> x + h or x -> -x - h."""
    shift, reflect = key
    return (-1, -shift) if reflect else (1, shift)


class ShiftReflectOp:
    """
    Reflection-shift operator in normal form: sum of c(x) T^h R^s.

    A term keyed (h, False) maps f to c(x) f(x + h); a term keyed (h, True)
    maps f to c(x) f(-x - h). Zero coefficients are never stored and every
    key appears at most once, so two operators are equal exactly when
    their term maps are equal.
    """

    def __init__(self, terms: Mapping[TermKey, CoefficientLike] = None) -> None:
        normal: Dict[TermKey, RatFunc] = {}
        for (shift, reflect), coefficient in (terms or {}).items():
            key = (Fraction(shift), bool(reflect))
            value = _as_ratfunc(coefficient)
            if key in normal:
                value = normal[key] + value
            normal[key] = value
        ordered = {k: normal[k] for k in sorted(normal, key=lambda k: (k[1], k[0])) if not normal[k].is_zero()}
        self._terms = MappingProxyType(ordered)

    @classmethod
    def identity(cls) -> "ShiftReflectOp":
        return cls({(Fraction(0), False): 1})

    @classmethod
    def zero(cls) -> "ShiftReflectOp":
        return cls()

    @classmethod
    def reflection(cls) -> "ShiftReflectOp":
        return cls({(Fraction(0), True): 1})

    @classmethod
    def shift(cls, h: Any) -> "ShiftReflectOp":
        return cls({(Fraction(h), False): 1})

    @classmethod
    def multiplication(cls, coefficient: CoefficientLike) -> "ShiftReflectOp":
        return cls({(Fraction(0), False): coefficient})

    @classmethod
    def term(cls, coefficient: CoefficientLike, h: Any, reflect: bool = False) -> "ShiftReflectOp":
        return cls({(Fraction(h), reflect): coefficient})

    @property
    def terms(self) -> Mapping[TermKey, RatFunc]:
        return self._terms

    def coefficient(self, h: Any, reflect: bool = False) -> RatFunc:
        return self._terms.get((Fraction(h), reflect), RatFunc.constant(0))

    def keys(self) -> Iterator[TermKey]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def has_reflection(self) -> bool:
        return any(reflect for _, reflect in self._terms)

    def is_scalar(self) -> bool:
        """True for q * identity with a constant q (including the zero operator)."""
        if self.is_zero():
            return True
        return list(self._terms) == [(Fraction(0), False)] and self._terms[(Fraction(0), False)].is_constant()

    def scalar_value(self) -> Fraction:
        return self.coefficient(0).constant_value()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShiftReflectOp):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "ShiftReflectOp") -> "ShiftReflectOp":
        if not isinstance(other, ShiftReflectOp):
            return NotImplemented
        merged: Dict[TermKey, RatFunc] = dict(self._terms)
        for key, value in other._terms.items():
            merged[key] = merged[key] + value if key in merged else value
        return ShiftReflectOp(merged)

    def __neg__(self) -> "ShiftReflectOp":
        return ShiftReflectOp({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "ShiftReflectOp") -> "ShiftReflectOp":
        if not isinstance(other, ShiftReflectOp):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, factor: Any) -> "ShiftReflectOp":
        """Left multiplication by a scalar or by a rational function of x."""
        if isinstance(factor, ShiftReflectOp):
            return NotImplemented
        coefficient = _as_ratfunc(factor)
        return ShiftReflectOp({k: coefficient * v for k, v in self._terms.items()})

    def __matmul__(self, other: "ShiftReflectOp") -> "ShiftReflectOp":
        return op_compose(self, other)

    def conjugate_by_shift(self, h: Any) -> "ShiftReflectOp":
        """T^h o self o T^-h."""
        return op_compose(op_compose(ShiftReflectOp.shift(h), self), ShiftReflectOp.shift(-Fraction(h)))

    def apply(self, p: UniPoly) -> UniPoly:
        return op_apply(self, p)

    def evaluate_terms(self, point: Fraction) -> Dict[TermKey, Fraction]:
        """Coefficient values at a point, keyed like the terms."""
        return {key: value(point) for key, value in self._terms.items()}

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"shift": format_rational(shift), "reflect": reflect, **value.to_json()}
            for (shift, reflect), value in self._terms.items()
        ]

    def __repr__(self) -> str:
        parts = []
        for (shift, reflect), value in self._terms.items():
            suffix = "R" if reflect else ""
            parts.append(f"[{value}] T^{format_rational(shift)}{suffix}")
        return " + ".join(parts) if parts else "0"


def op_compose(left: ShiftReflectOp, right: ShiftReflectOp) -> ShiftReflectOp:
    """
    Normal form of left o right.

    With left term c(x) T^a R^s and right term d(x) T^b R^t the product is
    c(x) d(phi(x)) T^{a +- b} R^{s xor t}, phi being the point map of the
    left term and the sign being minus when the left term reflects.
    """
    result: Dict[TermKey, RatFunc] = {}
    for left_key, c in left.terms.items():
        slope, offset = _image(left_key)
        left_shift, left_reflect = left_key
        for (right_shift, right_reflect), d in right.terms.items():
            moved = d.affine_substitute(slope, offset)
            shift = left_shift - right_shift if left_reflect else left_shift + right_shift
            key = (shift, left_reflect != right_reflect)
            value = c * moved
            result[key] = result[key] + value if key in result else value
    return ShiftReflectOp(result)


def op_apply(op: ShiftReflectOp, p: UniPoly) -> UniPoly:
    """
    Action on a polynomial.

    Individual terms may be non-polynomial; only the total, assembled over a
    common denominator, has to clear.

    Raises:
        NonPolynomialResultError: If the total is not a polynomial
    """
    if op.is_zero():
        return UniPoly()
    coefficients = list(op.terms.values())
    denominator = common_denominator(coefficients)
    total = UniPoly()
    for key, c in op.terms.items():
        slope, offset = _image(key)
        moved = p.affine_substitute(slope, offset)
        cofactor = denominator // c.den
        total = total + c.num * cofactor * moved
    quotient, remainder = total.divmod(denominator)
    if not remainder.is_zero():
        raise NonPolynomialResultError(f"Operator image of {p} is not a polynomial", remainder=remainder)
    return quotient


def op_equal(a: ShiftReflectOp, b: ShiftReflectOp) -> bool:
    return a == b


def commutator(a: Any, b: Any) -> Any:
    return a @ b - b @ a


def anticommutator(a: Any, b: Any) -> Any:
    return a @ b + b @ a
