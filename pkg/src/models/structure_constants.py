#!/usr/bin/env python
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Dict

from exact.scalar import format_rational


@dataclass(frozen=True)
class StructureConstants:
    d1: Fraction
    d2: Fraction
    d3: Fraction
    d4: Fraction
    d5: Fraction

    def as_floats(self) -> "StructureConstants":
        return StructureConstants(*(float(getattr(self, f.name)) for f in fields(self)))

    def to_dict(self) -> Dict[str, str]:
        return {f.name: format_rational(getattr(self, f.name)) for f in fields(self)}
