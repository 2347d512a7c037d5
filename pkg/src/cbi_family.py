#!/usr/bin/env python
"""
Bannai-Ito and complementary Bannai-Ito polynomials.

The coefficient formulas are written once as plain arithmetic on their
arguments, so the same code evaluates them at rational parameters and,
with a polynomial or rational-function argument, as functions of one
parameter (used by the rho1 -> infinity limits).
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Any, Tuple

from errors import InternalInconsistencyError, KernelDegenerateError, SingularParameterError
from exact.hypergeometric import pfq_terminating
from exact.scalar import HALF, format_rational, pochhammer
from exact.uni_poly import UniPoly
from models.param_set import ParamSet
from models.poly_table import PolyTable

DEFAULT_N_CAP = 30

X = UniPoly.x()


def bi_coefficient_parts(rho1: Any, rho2: Any, r1: Any, r2: Any, n: int) -> Tuple[Tuple[Any, Any], Tuple[Any, Any]]:
    """
    Numerator/denominator pairs of A_n and C_n.

    Returns:
        ((A numerator, A denominator), (C numerator, C denominator))
    """
    g = rho1 + rho2 - r1 - r2
    if n % 2 == 0:
        a_num = (n + 2 * rho1 - 2 * r1 + 1) * (n + 2 * rho1 - 2 * r2 + 1)
        c_num = -n * (n - 2 * r1 - 2 * r2)
    else:
        a_num = (n + 2 * g + 1) * (n + 2 * rho1 + 2 * rho2 + 1)
        c_num = -(n + 2 * rho2 - 2 * r2) * (n + 2 * rho2 - 2 * r1)
    return (a_num, 4 * (n + g + 1)), (c_num, 4 * (n + g))


def bi_coefficients(params: ParamSet, n: int) -> Tuple[Fraction, Fraction]:
    """
    Recurrence coefficients (A_n, C_n) of the Bannai-Ito polynomials.

    Raises:
        SingularParameterError: If 4(n+g+1) or, for n > 0, 4(n+g) vanishes
    """
    (a_num, a_den), (c_num, c_den) = bi_coefficient_parts(params.rho1, params.rho2, params.r1, params.r2, n)
    if a_den == 0:
        raise SingularParameterError(f"A_{n} is singular: n + g + 1 = 0 with g = {format_rational(params.g)}", n=n)
    if n == 0:
        return a_num / a_den, Fraction(0)
    if c_den == 0:
        raise SingularParameterError(f"C_{n} is singular: n + g = 0 with g = {format_rational(params.g)}", n=n)
    return a_num / a_den, c_num / c_den


@lru_cache(maxsize=256)
def _bi_sequence(params: ParamSet, n: int) -> Tuple[UniPoly, ...]:
    polys = [UniPoly.constant(1)]
    previous = UniPoly()
    for k in range(n):
        a_k, c_k = bi_coefficients(params, k)
        step = (X + (a_k + c_k - params.rho1)) * polys[k]
        if k > 0:
            a_prev, _ = bi_coefficients(params, k - 1)
            step = step - (a_prev * c_k) * previous
        previous = polys[k]
        polys.append(step)
    return tuple(polys)


def bi_polynomial(params: ParamSet, n: int) -> UniPoly:
    """Monic B_n from B_{k+1} = (x - rho1 + A_k + C_k) B_k - A_{k-1} C_k B_{k-1}."""
    return _bi_sequence(params, n)[n]


def bi_table(params: ParamSet, n: int) -> PolyTable:
    return PolyTable("bi", params, _bi_sequence(params, n))


def tau_parts(rho1: Any, rho2: Any, r1: Any, r2: Any, n: int) -> Tuple[Any, Any]:
    """Numerator and denominator of tau_n (tau_0 is 0/1)."""
    if n == 0:
        return Fraction(0), Fraction(1)
    g = rho1 + rho2 - r1 - r2
    m = n // 2
    if n % 2 == 0:
        num = -m * (m + rho1 - r1 + HALF) * (m + rho1 - r2 + HALF) * (m - r1 - r2)
        den = (2 * m + g) * (2 * m + g + 1)
    else:
        num = -(m + g + 1) * (m + rho1 + rho2 + 1) * (m + rho2 - r1 + HALF) * (m + rho2 - r2 + HALF)
        den = (2 * m + g + 1) * (2 * m + g + 2)
    return num, den


def cbi_tau(params: ParamSet, n: int) -> Fraction:
    """
    Off-diagonal coefficient tau_n of the CBI recurrence.

    Raises:
        SingularParameterError: If the parity-split denominator vanishes
    """
    num, den = tau_parts(params.rho1, params.rho2, params.r1, params.r2, n)
    if den == 0:
        raise SingularParameterError(f"tau_{n} is singular at g = {format_rational(params.g)}", n=n)
    return Fraction(num) / den


def recurrence_diagonal(params: ParamSet, n: int) -> Fraction:
    """(-1)^n rho2, the diagonal of the CBI recurrence."""
    return params.rho2 if n % 2 == 0 else -params.rho2


@lru_cache(maxsize=256)
def _cbi_sequence(params: ParamSet, n: int) -> Tuple[UniPoly, ...]:
    polys = [UniPoly.constant(1)]
    for k in range(n):
        step = (X - recurrence_diagonal(params, k)) * polys[k]
        if k > 0:
            step = step - cbi_tau(params, k) * polys[k - 1]
        polys.append(step)
    return tuple(polys)


def cbi_polynomial(params: ParamSet, n: int) -> UniPoly:
    """Monic I_n from I_{k+1} = (x - (-1)^k rho2) I_k - tau_k I_{k-1}."""
    return _cbi_sequence(params, n)[n]


def cbi_table(params: ParamSet, n: int) -> PolyTable:
    return PolyTable("cbi", params, _cbi_sequence(params, n))


def christoffel_transform(params: ParamSet, n: int) -> UniPoly:
    """
    Kernel polynomial (B_{n+1} - A_n B_n) / (x - rho1).

    Raises:
        InternalInconsistencyError: If the division by (x - rho1) leaves a remainder
    """
    a_n, _ = bi_coefficients(params, n)
    numerator = bi_polynomial(params, n + 1) - a_n * bi_polynomial(params, n)
    quotient, remainder = numerator.divmod(X - params.rho1)
    if not remainder.is_zero():
        raise InternalInconsistencyError(
            f"B_{n + 1} - A_{n} B_{n} is not divisible by x - rho1 at {params} (remainder {remainder})"
        )
    return quotient


def geronimus_reconstruct(params: ParamSet, n: int) -> UniPoly:
    """B_n recovered as I_n - C_n I_{n-1}."""
    if n == 0:
        return cbi_polynomial(params, 0)
    _, c_n = bi_coefficients(params, n)
    return cbi_polynomial(params, n) - c_n * cbi_polynomial(params, n - 1)


def kernel_ratio(params: ParamSet, n: int) -> Fraction:
    """
    B_{n+1}(rho1) / B_n(rho1), which must equal A_n.

    Raises:
        KernelDegenerateError: If B_n(rho1) = 0
    """
    base = bi_polynomial(params, n)(params.rho1)
    if base == 0:
        raise KernelDegenerateError(f"B_{n}(rho1) = 0 at {params}; the kernel transform is undefined", n=n)
    return bi_polynomial(params, n + 1)(params.rho1) / base


def _even_closed_form(params: ParamSet, m: int) -> UniPoly:
    rho1, rho2, r1, r2, g = params.rho1, params.rho2, params.r1, params.r2, params.g
    lower = [rho1 + rho2 + 1, rho2 - r1 + HALF, rho2 - r2 + HALF]
    eta = pochhammer(lower[0], m) * pochhammer(lower[1], m) * pochhammer(lower[2], m)
    pivot = pochhammer(m + g + 1, m)
    if pivot == 0:
        raise SingularParameterError(f"Prefactor of I_{2 * m} is singular at {params}", n=2 * m)
    eta = eta / pivot
    series = pfq_terminating([Fraction(-m), m + g + 1, X + rho2, rho2 - X], lower)
    return UniPoly.constant(1) * (eta * series)


def _odd_closed_form(params: ParamSet, m: int) -> UniPoly:
    rho1, rho2, r1, r2, g = params.rho1, params.rho2, params.r1, params.r2, params.g
    lower = [rho1 + rho2 + 2, rho2 - r1 + 3 * HALF, rho2 - r2 + 3 * HALF]
    iota = pochhammer(lower[0], m) * pochhammer(lower[1], m) * pochhammer(lower[2], m)
    pivot = pochhammer(m + g + 2, m)
    if pivot == 0:
        raise SingularParameterError(f"Prefactor of I_{2 * m + 1} is singular at {params}", n=2 * m + 1)
    iota = iota / pivot
    series = pfq_terminating([Fraction(-m), m + g + 2, X + rho2 + 1, rho2 + 1 - X], lower)
    return (X - rho2) * (iota * series)


def cbi_closed_form(params: ParamSet, n: int) -> UniPoly:
    """
    I_n from the terminating 4F3 representation, expanded symbolically in x.

    Even degrees are a polynomial in x^2; odd degrees carry the factor (x - rho2).
    """
    m = n // 2
    poly = _even_closed_form(params, m) if n % 2 == 0 else _odd_closed_form(params, m)
    if not poly.is_monic() or poly.degree != n:
        # The sign of the prefactor makes the result monic; anything else is a transcription fault.
        raise InternalInconsistencyError(f"Closed form of I_{n} at {params} is not monic of degree {n}")
    return poly


def parity_residual(params: ParamSet, n: int) -> UniPoly:
    """
    Residual of the parity relation of I_n.

    Even n: I_n(x) - I_n(-x). Odd n: (rho2 - x) I_n(-x) - (x + rho2) I_n(x).
    """
    poly = cbi_polynomial(params, n)
    mirrored = poly.affine_substitute(-1, 0)
    if n % 2 == 0:
        return poly - mirrored
    return (params.rho2 - X) * mirrored - (X + params.rho2) * poly


def kernel_round_trip(params: ParamSet, n_max: int) -> Tuple[int, ...]:
    """
    Degrees where the Christoffel/Geronimus pair fails to reproduce the families.

    Returns:
        Sorted degrees n <= n_max with a mismatch; empty when everything agrees
    """
    failures = []
    for n in range(n_max + 1):
        kernel = christoffel_transform(params, n)
        back = geronimus_reconstruct(params, n)
        if kernel != cbi_polynomial(params, n) or back != bi_polynomial(params, n):
            logging.error(f"Kernel round trip failed at n={n} for {params}")
            failures.append(n)
    return tuple(failures)
