#!/usr/bin/env python
"""Bannai-Ito grids and the five-term difference equation on them."""
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Tuple

from errors import GridPoleError, PoleError
from exact.scalar import QUARTER
from models.param_set import ParamSet
from models.poly_table import PolyTable
from models.reports import EigenFailure, EigenReport
from operators.dunkl import build_D_alpha, eigenvalue_lambda
from operators.shift_reflect_op import ShiftReflectOp, TermKey

GridFunction = Callable[[Fraction, int], Fraction]

SEARCH_OFFSETS = (-2, -1, 0, 1, 2)


def bi_grid(h: Any, k: int) -> Fraction:
    """x_k = (-1)^k (k/2 + h + 1/4) - 1/4."""
    sign = 1 if k % 2 == 0 else -1
    return sign * (Fraction(k, 2) + Fraction(h) + QUARTER) - QUARTER


def alternate_grid(h: Any, k: int) -> Fraction:
    """x_k = (-1)^k (h - k/2 - 1/4) - 1/4."""
    sign = 1 if k % 2 == 0 else -1
    return sign * (Fraction(h) - Fraction(k, 2) - QUARTER) - QUARTER


GRIDS: Dict[str, GridFunction] = {"standard": bi_grid, "alternate": alternate_grid}


def term_image(key: TermKey, x: Fraction) -> Fraction:
    shift, reflect = key
    return -x - shift if reflect else x + shift


def locate(grid: GridFunction, h: Fraction, k: int, point: Fraction) -> int:
    """
    Index j with grid(h, j) == point among the neighbours k-2..k+2.

    Raises:
        ValueError: If the point is not a neighbouring grid point
    """
    for offset in SEARCH_OFFSETS:
        if grid(h, k + offset) == point:
            return k + offset
    raise ValueError(f"Point {point} is not within two steps of grid index {k}")


def grid_action_table(grid: GridFunction, h: Any, k: int) -> Dict[str, int]:
    """Grid index reached from x_k by T^+, T^-, R and T^+R."""
    h = Fraction(h)
    x = grid(h, k)
    return {
        "T+": locate(grid, h, k, x + 1),
        "T-": locate(grid, h, k, x - 1),
        "R": locate(grid, h, k, -x),
        "T+R": locate(grid, h, k, -x - 1),
    }


def expected_action_table(k: int) -> Dict[str, int]:
    """Neighbour offsets of the standard grid by parity of k."""
    if k % 2 == 0:
        return {"T+": k + 2, "T-": k - 2, "R": k - 1, "T+R": k + 1}
    return {"T+": k - 2, "T-": k + 2, "R": k + 1, "T+R": k - 1}


def five_term_coefficients(op: ShiftReflectOp, grid: GridFunction, h: Any, k: int) -> Dict[int, Fraction]:
    """
    Coefficients of the five-term equation at x_k, keyed by the grid index they multiply.

    Raises:
        GridPoleError: If an operator coefficient has a pole at x_k
    """
    h = Fraction(h)
    x = grid(h, k)
    result: Dict[int, Fraction] = {}
    for key, value in op.terms.items():
        try:
            c = value(x)
        except PoleError:
            raise GridPoleError(f"Operator coefficient has a pole at grid point x_{k} = {x}", k=k)
        j = locate(grid, h, k, term_image(key, x))
        result[j] = result.get(j, Fraction(0)) + c
    return result


def five_term_apply(
    params: ParamSet,
    alpha: Any,
    table: PolyTable,
    h: Any,
    k_range: Iterable[int],
    grid: str = "standard",
) -> EigenReport:
    """
    Check sum_j coeff_j(x_k) I_n(x_j) = Lambda_n I_n(x_k) for every n in the table and k in range.

    Raises:
        GridPoleError: If a coefficient is singular on a tested grid point
    """
    grid_fn = GRIDS[grid]
    operator = build_D_alpha(params, alpha)
    h = Fraction(h)
    ks = list(k_range)
    rows: List[Tuple[int, Dict[int, Fraction]]] = [(k, five_term_coefficients(operator, grid_fn, h, k)) for k in ks]
    failures = []
    for n, poly in enumerate(table.entries):
        eigenvalue = eigenvalue_lambda(params, alpha, n)
        for k, coefficients in rows:
            lhs = sum((c * poly(grid_fn(h, j)) for j, c in coefficients.items()), Fraction(0))
            residual = lhs - eigenvalue * poly(grid_fn(h, k))
            if residual != 0:
                logging.error(f"Five-term equation failed at n={n}, k={k} on the {grid} grid: {residual}")
                failures.append(EigenFailure(n, str(residual), k=k))
    return EigenReport(f"five-term equation on the {grid} grid", params, Fraction(alpha), len(table) - 1, tuple(failures))
