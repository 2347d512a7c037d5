#!/usr/bin/env python
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from exact.scalar import format_rational
from models.param_set import ParamSet


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs; fixed config and seed give byte-identical reports."""
    command: str
    suite: Optional[str] = None
    family: str = "cbi"
    params: Optional[ParamSet] = None
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(1, 3)
    n_max: int = 30
    truncation_n: Optional[int] = None
    even_triple: Optional[Tuple[Fraction, Fraction, Fraction]] = None
    odd_triple: Optional[Tuple[Fraction, Fraction, Fraction]] = None
    gamma: Fraction = Fraction(1, 3)
    grid_h: Optional[Fraction] = None
    eps: Tuple[float, ...] = (1e-3, 1e-4, 1e-5)
    output_format: str = "json"
    seed: int = 7
    draws: int = 5
    workers: int = 1
    output: Optional[Path] = None
    operator: str = "D_alpha"

    def to_dict(self) -> Dict[str, Any]:
        """Report header; only values that influence the result, in a fixed order."""
        data: Dict[str, Any] = {}
        for key, value in asdict(self).items():
            if key in ("output", "workers"):
                continue
            data[key] = _jsonable(value)
        if self.params is not None:
            data["params"] = self.params.to_dict()
        return data


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, Path):
        return str(value)
    return value
