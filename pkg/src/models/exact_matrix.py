#!/usr/bin/env python
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Sequence

import numpy as np

from exact.scalar import format_rational


@dataclass(frozen=True)
class ExactMatrix:
    """
    Square matrix of Fractions backed by a numpy object array.

    Supports the same algebra protocol as ShiftReflectOp (@, +, -, scalar *)
    so relation builders can run on matrices unchanged.
    """
    entries: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.entries, dtype=object)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"ExactMatrix must be square, got shape {array.shape}")
        array.flags.writeable = False
        object.__setattr__(self, "entries", array)

    @classmethod
    def zeros(cls, size: int) -> "ExactMatrix":
        return cls(np.full((size, size), Fraction(0), dtype=object))

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        array = np.full((size, size), Fraction(0), dtype=object)
        for i in range(size):
            array[i, i] = Fraction(1)
        return cls(array)

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "ExactMatrix":
        size = len(values)
        array = np.full((size, size), Fraction(0), dtype=object)
        for i, v in enumerate(values):
            array[i, i] = Fraction(v)
        return cls(array)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "ExactMatrix":
        return cls(np.array([[Fraction(v) for v in row] for row in rows], dtype=object))

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, index: Any) -> Any:
        return self.entries[index]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.entries.dot(other.entries))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.entries + other.entries)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.entries - other.entries)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(-self.entries)

    def __rmul__(self, scalar: Any) -> "ExactMatrix":
        return ExactMatrix(self.entries * Fraction(scalar))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix) or other.size != self.size:
            return False
        return bool(np.all(self.entries == other.entries))

    def leading_block(self, size: int) -> "ExactMatrix":
        return ExactMatrix(self.entries[:size, :size])

    def is_zero(self) -> bool:
        return bool(np.all(self.entries == 0))

    def is_scalar(self) -> bool:
        first = self.entries[0, 0]
        return (self - first * ExactMatrix.identity(self.size)).is_zero()

    def bandwidth(self) -> int:
        width = 0
        for i, j in zip(*np.nonzero(self.entries != 0)):
            width = max(width, abs(int(i) - int(j)))
        return width

    def to_float(self) -> np.ndarray:
        return self.entries.astype(float)

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(v) for v in row] for row in self.entries]
