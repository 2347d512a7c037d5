#!/usr/bin/env python
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict

from exact.scalar import ScalarLike, format_rational, to_scalar


@dataclass(frozen=True)
class ParamSet:
    """The parameter tuple (rho1, rho2, r1, r2); g is always derived."""
    rho1: Fraction
    rho2: Fraction
    r1: Fraction
    r2: Fraction

    def __post_init__(self) -> None:
        for name in ("rho1", "rho2", "r1", "r2"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))

    @property
    def g(self) -> Fraction:
        return self.rho1 + self.rho2 - self.r1 - self.r2

    def with_values(self, **changes: ScalarLike) -> "ParamSet":
        return replace(self, **{k: to_scalar(v) for k, v in changes.items()})

    def to_dict(self) -> Dict[str, str]:
        return {
            "rho1": format_rational(self.rho1),
            "rho2": format_rational(self.rho2),
            "r1": format_rational(self.r1),
            "r2": format_rational(self.r2),
            "g": format_rational(self.g),
        }

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(v) for v in (self.rho1, self.rho2, self.r1, self.r2)) + ")"


@dataclass(frozen=True)
class DualHahnParams:
    """Parameters (rho2, r1, r2) left after sending rho1 to infinity."""
    rho2: Fraction
    r1: Fraction
    r2: Fraction

    def __post_init__(self) -> None:
        for name in ("rho2", "r1", "r2"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))

    def to_dict(self) -> Dict[str, str]:
        return {
            "rho2": format_rational(self.rho2),
            "r1": format_rational(self.r1),
            "r2": format_rational(self.r2),
        }


@dataclass(frozen=True)
class AWParams:
    """Askey-Wilson parameters; numeric only."""
    a: complex
    b: complex
    c: complex
    d: complex
    q: complex

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d", "q"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.q == 0:
            raise ValueError("Askey-Wilson base q must be nonzero")
