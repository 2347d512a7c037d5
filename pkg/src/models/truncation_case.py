#!/usr/bin/env python
from dataclasses import dataclass
from enum import Enum
from typing import Dict


class TruncationTag(Enum):
    """Which linear relation among the parameters forces tau_{N+1} = 0."""
    EVEN_1 = "even-1"
    EVEN_2 = "even-2"
    EVEN_3 = "even-3"
    ODD_I = "odd-i"
    ODD_II = "odd-ii"
    ODD_III = "odd-iii"

    @property
    def is_even(self) -> bool:
        return self.value.startswith("even")


class BiTruncationTag(Enum):
    """Truncation conditions A_N C_{N+1} = 0 of the Bannai-Ito recurrence."""
    EVEN_1 = "bi-even-1"
    EVEN_2 = "bi-even-2"
    EVEN_3 = "bi-even-3"
    EVEN_4 = "bi-even-4"
    ODD_I = "bi-odd-i"
    ODD_II = "bi-odd-ii"

    @property
    def is_even(self) -> bool:
        return "even" in self.value


@dataclass(frozen=True)
class TruncationCase:
    tag: TruncationTag
    N: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError(f"Truncation size N must be positive, got {self.N}")
        if self.tag.is_even != (self.N % 2 == 0):
            raise ValueError(f"Tag {self.tag.value} does not match the parity of N = {self.N}")

    def to_dict(self) -> Dict[str, object]:
        return {"tag": self.tag.value, "N": self.N}


@dataclass(frozen=True)
class BiTruncationCase:
    tag: BiTruncationTag
    N: int

    def __post_init__(self) -> None:
        if self.tag.is_even != (self.N % 2 == 0):
            raise ValueError(f"Tag {self.tag.value} does not match the parity of N = {self.N}")

    def to_dict(self) -> Dict[str, object]:
        return {"tag": self.tag.value, "N": self.N}
