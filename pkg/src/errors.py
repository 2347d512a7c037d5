#!/usr/bin/env python
"""
Error kinds raised by the exact kernels, the verification suites and the CLI.

Every error also derives from the closest builtin so callers can catch
either the project type or the generic one.
"""
from typing import Any, Dict, Optional


class CbiError(Exception):
    """Base class for every error raised by this project."""


class InvalidSubstitutionError(CbiError, ValueError):
    pass


class NonPolynomialResultError(CbiError, ArithmeticError):
    """A rational expression failed to collapse to a polynomial."""

    def __init__(self, message: str, remainder: Any = None) -> None:
        super().__init__(message)
        self.remainder = remainder


class PoleError(CbiError, ZeroDivisionError):
    """A rational function was evaluated at a zero of its denominator."""

    def __init__(self, message: str, point: Any = None) -> None:
        super().__init__(message)
        self.point = point


class SingularParameterError(CbiError, ZeroDivisionError):
    def __init__(self, message: str, n: Optional[int] = None) -> None:
        super().__init__(message)
        self.n = n


class DivergentLimitError(CbiError, ArithmeticError):
    pass


class InternalInconsistencyError(CbiError, RuntimeError):
    pass


class KernelDegenerateError(CbiError, ArithmeticError):
    def __init__(self, message: str, n: int) -> None:
        super().__init__(message)
        self.n = n


class GridPoleError(CbiError, ArithmeticError):
    def __init__(self, message: str, k: int) -> None:
        super().__init__(message)
        self.k = k


class NotTruncatedError(CbiError, ValueError):
    pass


class InadmissibleTruncationError(CbiError, ValueError):
    pass


class VerificationFailure(CbiError, RuntimeError):
    """
    An asserted identity did not hold.

    Args:
        message: Human readable description
        witness: Minimal data needed to reproduce the failure
    """

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.witness: Dict[str, Any] = dict(witness or {})


class CasimirFailure(VerificationFailure):
    pass


class LimitFailure(VerificationFailure):
    pass


class PositivityError(CbiError, ValueError):
    pass


class ConditioningError(CbiError, ArithmeticError):
    pass


class DomainError(CbiError, ValueError):
    pass


class ParseError(CbiError, ValueError):
    pass


class ConfigError(CbiError, ValueError):
    pass
