#!/usr/bin/env python
from dataclasses import dataclass
from typing import Dict, List, Tuple

from exact.uni_poly import UniPoly
from models.param_set import ParamSet


@dataclass(frozen=True)
class PolyTable:
    """Monic polynomials of one family, entry n having degree n."""
    family: str
    params: ParamSet
    entries: Tuple[UniPoly, ...]

    def __post_init__(self) -> None:
        for n, poly in enumerate(self.entries):
            if poly.degree != n or not poly.is_monic():
                raise ValueError(f"Entry {n} of the {self.family} table is not monic of degree {n}")

    def __getitem__(self, n: int) -> UniPoly:
        return self.entries[n]

    def __len__(self) -> int:
        return len(self.entries)

    def to_dict(self) -> Dict[str, object]:
        return {
            "family": self.family,
            "params": self.params.to_dict(),
            "polys": [p.to_strings() for p in self.entries],
        }

    def to_rows(self) -> List[List[str]]:
        """One CSV row per degree: the coefficients in ascending order."""
        return [p.to_strings() for p in self.entries]
