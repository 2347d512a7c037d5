#!/usr/bin/env python
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from exact.scalar import format_rational
from models.param_set import ParamSet


@dataclass(frozen=True)
class EigenFailure:
    n: int
    residual: str
    k: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"n": self.n}
        if self.k is not None:
            data["k"] = self.k
        data["residual"] = self.residual
        return data


@dataclass(frozen=True)
class EigenReport:
    """Outcome of an eigenvalue-equation sweep; empty failures means every identity held."""
    identity: str
    params: ParamSet
    alpha: Fraction
    max_n: int
    failures: Tuple[EigenFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "params": self.params.to_dict(),
            "alpha": format_rational(self.alpha),
            "max_n": self.max_n,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
        }


@dataclass(frozen=True)
class OrthoReport:
    case: Dict[str, Any]
    params: ParamSet
    grid: Tuple[Fraction, ...]
    weights: Tuple[Fraction, ...]
    gram_offdiag_max_abs: Fraction
    norm_ratios: Tuple[Fraction, ...]
    expected_ratios: Tuple[Fraction, ...]
    positivity: Tuple[bool, ...]
    weights_uniform_sign: bool

    @property
    def passed(self) -> bool:
        return self.gram_offdiag_max_abs == 0 and self.norm_ratios == self.expected_ratios

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case": self.case,
            "params": self.params.to_dict(),
            "passed": self.passed,
            "gram_offdiag_max_abs": format_rational(self.gram_offdiag_max_abs),
            "norm_ratios": [format_rational(r) for r in self.norm_ratios],
            "expected_ratios": [format_rational(r) for r in self.expected_ratios],
            "positivity": list(self.positivity),
            "weights_uniform_sign": self.weights_uniform_sign,
            "grid": [format_rational(x) for x in self.grid],
            "weights": [format_rational(w) for w in self.weights],
        }


@dataclass(frozen=True)
class RelationCheck:
    name: str
    normal_form_pass: bool
    action_pass: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "normal_form_pass": self.normal_form_pass, "action_pass": self.action_pass}


@dataclass(frozen=True)
class RelationReport:
    """Per-relation outcome of the algebra checks, two methods each."""
    params: Dict[str, str]
    alpha: Fraction
    constants: Dict[str, str]
    checks: Tuple[RelationCheck, ...]
    warnings: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.action_pass for c in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params,
            "alpha": format_rational(self.alpha),
            "constants": self.constants,
            "passed": self.passed,
            "relations": [c.to_dict() for c in self.checks],
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class LimitRow:
    n: int
    quantity: str
    eps: float
    error: float
    ratio: Optional[float]
    imag: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "quantity": self.quantity,
            "eps": self.eps,
            "error": self.error,
            "ratio": self.ratio,
            "imag": self.imag,
        }


@dataclass(frozen=True)
class NumericLimitReport:
    params: ParamSet
    eps_list: Tuple[float, ...]
    rows: Tuple[LimitRow, ...]
    failures: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "eps": list(self.eps_list),
            "passed": self.passed,
            "failures": list(self.failures),
            "rows": [r.to_dict() for r in self.rows],
        }


@dataclass
class SuiteReport:
    """
    Aggregated result of one CLI suite.

    Checks are appended in a fixed order so the serialized report is
    byte-identical across runs with the same configuration.
    """
    suite: str
    config: Dict[str, Any]
    checks: List[Dict[str, Any]] = field(default_factory=list)

    def add(self, name: str, passed: bool, identity: str, **details: Any) -> None:
        self.checks.append({"name": name, "identity": identity, "passed": bool(passed), **details})

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    @property
    def failures(self) -> List[Dict[str, Any]]:
        return [c for c in self.checks if not c["passed"]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "config": self.config,
            "passed": self.passed,
            "check_count": len(self.checks),
            "failure_count": len(self.failures),
            "checks": self.checks,
        }
