#!/usr/bin/env python
"""
Truncation conditions, spectral grids, weights and exact discrete orthogonality.

Everything here is exact; no tolerance appears in this module.
"""
import logging
from fractions import Fraction
from itertools import accumulate
from operator import mul
from typing import Any, Callable, List, Sequence, Tuple

import numpy as np

from errors import (
    DomainError,
    InadmissibleTruncationError,
    NotTruncatedError,
    SingularParameterError,
    VerificationFailure,
)
from exact.scalar import HALF, format_rational, pochhammer
from exact.uni_poly import UniPoly
from models.param_set import ParamSet
from models.reports import OrthoReport
from models.truncation_case import BiTruncationCase, BiTruncationTag, TruncationCase, TruncationTag
from cbi_family import bi_coefficient_parts, bi_coefficients, bi_polynomial, cbi_polynomial, cbi_tau, tau_parts
from operators.grid import alternate_grid, bi_grid
from param_sampler import random_param_set

WeightArgs = Tuple[Fraction, Fraction, Fraction, Fraction]


def classify_truncation(params: ParamSet, N: int) -> TruncationCase:
    """
    Identify which truncation condition makes tau_{N+1} vanish.

    Raises:
        InadmissibleTruncationError: For g = -(N+2)/2 with N even, or a singular tau_{N+1}
        NotTruncatedError: If tau_{N+1} != 0
    """
    rho1, rho2, r1, r2, g = params.rho1, params.rho2, params.r1, params.r2, params.g
    if N < 1:
        raise DomainError(f"Truncation size N must be positive, got {N}")
    if N % 2 == 0 and g == -Fraction(N + 2, 2):
        raise InadmissibleTruncationError(f"g = -(N+2)/2 at N = {N} makes tau_n singular")
    num, den = tau_parts(rho1, rho2, r1, r2, N + 1)
    if den == 0:
        raise InadmissibleTruncationError(f"tau_{N + 1} is singular at {params}")
    if num != 0:
        raise NotTruncatedError(f"tau_{N + 1} = {format_rational(num / den)} is nonzero at {params}")
    if N % 2 == 0:
        half = Fraction(N + 1, 2)
        checks = [
            (TruncationTag.EVEN_1, rho2 - r1 == -half),
            (TruncationTag.EVEN_2, rho2 - r2 == -half),
            (TruncationTag.EVEN_3, rho1 + rho2 == -Fraction(N + 2, 2)),
        ]
    else:
        step = Fraction(N + 2, 2)
        checks = [
            (TruncationTag.ODD_I, r1 - rho1 == step),
            (TruncationTag.ODD_II, r1 + r2 == Fraction(N + 1, 2)),
            (TruncationTag.ODD_III, r2 - rho1 == step),
        ]
    for tag, holds in checks:
        if holds:
            return TruncationCase(tag, N)
    raise InadmissibleTruncationError(f"tau_{N + 1} vanishes at {params} but no truncation case applies")


def spectral_grid(case: TruncationCase, params: ParamSet) -> List[Fraction]:
    """The N+1 grid points, which are the roots of I_{N+1}."""
    if case.tag.is_even:
        return [bi_grid(params.rho2, k) for k in range(case.N + 1)]
    h = params.r2 if case.tag is TruncationTag.ODD_III else params.r1
    return [alternate_grid(h, k) for k in range(case.N + 1)]


def weight_function(rho1: Fraction, rho2: Fraction, r1: Fraction, r2: Fraction, k: int) -> Fraction:
    """
    Bannai-Ito weight w_k with k = 2l + nu.

    Raises:
        SingularParameterError: If a lower Pochhammer vanishes
    """
    ell, nu = divmod(k, 2)
    upper = (
        pochhammer(rho1 - r1 + HALF, ell + nu)
        * pochhammer(rho1 - r2 + HALF, ell + nu)
        * pochhammer(rho1 + rho2 + 1, ell)
        * pochhammer(2 * rho1 + 1, ell)
    )
    lower = (
        pochhammer(rho1 + r1 + HALF, ell + nu)
        * pochhammer(rho1 + r2 + HALF, ell + nu)
        * pochhammer(rho1 - rho2 + 1, ell)
        * pochhammer(Fraction(1), ell)
    )
    if lower == 0:
        raise SingularParameterError(f"Weight w_{k} is singular at ({rho1}, {rho2}, {r1}, {r2})", n=k)
    value = upper / lower
    return -value if nu else value


def bi_weight(params: ParamSet, k: int) -> Fraction:
    return weight_function(params.rho1, params.rho2, params.r1, params.r2, k)


def _cbi_weight_args(case: TruncationCase, params: ParamSet) -> WeightArgs:
    rho1, rho2, r1, r2 = params.rho1, params.rho2, params.r1, params.r2
    if case.tag.is_even:
        return rho2, rho1, r1, r2
    if case.tag is TruncationTag.ODD_III:
        return -r2, -r1, -rho1, -rho2
    return -r1, -r2, -rho1, -rho2


def cbi_weight(case: TruncationCase, params: ParamSet, k: int) -> Fraction:
    """w~_k = (x_k - rho1) w_k with the case-dependent argument substitution."""
    if not 0 <= k <= case.N:
        raise DomainError(f"Weight index k = {k} outside 0..{case.N}")
    x_k = spectral_grid(case, params)[k]
    return (x_k - params.rho1) * weight_function(*_cbi_weight_args(case, params), k)


def gram_matrix(polys: Sequence[UniPoly], grid: Sequence[Fraction], weights: Sequence[Fraction]) -> List[List[Fraction]]:
    """G[n][m] = sum_k w_k P_n(x_k) P_m(x_k), exactly."""
    values = [[p(x) for x in grid] for p in polys]
    size = len(polys)
    gram = [[Fraction(0)] * size for _ in range(size)]
    for n in range(size):
        for m in range(n, size):
            entry = sum((w * a * b for w, a, b in zip(weights, values[n], values[m])), Fraction(0))
            gram[n][m] = gram[m][n] = entry
    return gram


def _uniform_sign(values: Sequence[Fraction]) -> bool:
    signs = {v > 0 for v in values if v != 0}
    return len(signs) == 1 and all(v != 0 for v in values)


def _check_gram(
    label: str,
    case_dict: dict,
    params: ParamSet,
    polys: Sequence[UniPoly],
    grid: List[Fraction],
    weights: List[Fraction],
    expected: List[Fraction],
    positivity: Tuple[bool, ...],
) -> OrthoReport:
    gram = gram_matrix(polys, grid, weights)
    size = len(polys)
    offdiag = max((abs(gram[n][m]) for n in range(size) for m in range(size) if n != m), default=Fraction(0))
    if offdiag != 0:
        witness = next((n, m) for n in range(size) for m in range(size) if n != m and gram[n][m] != 0)
        logging.error(f"{label}: Gram entry {witness} = {gram[witness[0]][witness[1]]} at {params}")
        raise VerificationFailure(
            f"{label}: nonzero off-diagonal Gram entry at {witness}",
            {"params": params.to_dict(), "case": case_dict, "pair": list(witness),
             "value": format_rational(gram[witness[0]][witness[1]])},
        )
    if gram[0][0] == 0:
        raise VerificationFailure(f"{label}: total weight vanishes", {"params": params.to_dict(), "case": case_dict})
    ratios = [gram[n][n] / gram[0][0] for n in range(size)]
    for n, (got, want) in enumerate(zip(ratios, expected)):
        if got != want:
            raise VerificationFailure(
                f"{label}: norm ratio mismatch at n = {n}",
                {"params": params.to_dict(), "case": case_dict, "n": n,
                 "ratio": format_rational(got), "expected": format_rational(want)},
            )
    logging.info(f"{label}: orthogonality verified for {case_dict} at {params}")
    return OrthoReport(
        case=case_dict,
        params=params,
        grid=tuple(grid),
        weights=tuple(weights),
        gram_offdiag_max_abs=offdiag,
        norm_ratios=tuple(ratios),
        expected_ratios=tuple(expected),
        positivity=positivity,
        weights_uniform_sign=_uniform_sign(weights),
    )


def verify_orthogonality(case: TruncationCase, params: ParamSet) -> OrthoReport:
    """
    Exact Gram matrix of I_0..I_N on the spectral grid.

    Raises:
        VerificationFailure: On a nonzero off-diagonal entry or a norm ratio other than tau_1...tau_n
    """
    N = case.N
    grid = spectral_grid(case, params)
    roots = cbi_polynomial(params, N + 1)
    stray = [k for k, x in enumerate(grid) if roots(x) != 0]
    if stray or len(set(grid)) != len(grid):
        raise VerificationFailure(
            "Spectral grid is not the root set of I_{N+1}",
            {"params": params.to_dict(), "case": case.to_dict(), "k": stray[:1]},
        )
    weights = [cbi_weight(case, params, k) for k in range(N + 1)]
    taus = [cbi_tau(params, n) for n in range(1, N + 1)]
    expected = list(accumulate([Fraction(1)] + taus, mul))
    return _check_gram(
        "CBI orthogonality",
        case.to_dict(),
        params,
        [cbi_polynomial(params, n) for n in range(N + 1)],
        grid,
        weights,
        expected,
        tuple(t > 0 for t in taus),
    )


def grid_weight_table(case: TruncationCase, params: ParamSet) -> List[List[str]]:
    """CSV rows k, x_k, w~_k."""
    grid = spectral_grid(case, params)
    return [[str(k), format_rational(x), format_rational(cbi_weight(case, params, k))] for k, x in enumerate(grid)]


def _require_positive(values: Sequence[Fraction], names: str) -> None:
    if any(v <= 0 for v in values):
        raise DomainError(f"Parameters {names} must be positive")


def positive_even_params(a: Any, b: Any, c: Any, N: int) -> ParamSet:
    """Positive-definite truncation with N even (case 1)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    _require_positive([a, b, c], "a, b, c")
    if N < 2 or N % 2:
        raise DomainError(f"N must be a positive even integer, got {N}")
    s = (a + b) / 2
    return ParamSet((s + c + N) / 2, (s - 1) / 2, (s + N) / 2, (a - b) / 4)


def positive_odd_params(zeta: Any, xi: Any, chi: Any, N: int) -> ParamSet:
    """Positive-definite truncation with N odd (case ii)."""
    zeta, xi, chi = Fraction(zeta), Fraction(xi), Fraction(chi)
    _require_positive([zeta, xi, chi], "zeta, xi, chi")
    if N < 3 or N % 2 == 0:
        raise DomainError(f"N must be an odd integer greater than 1, got {N}")
    s = (zeta + xi) / 2
    return ParamSet((s + chi + N) / 2, (zeta - xi) / 4, (s + N + 1) / 2, -(zeta + xi) / 4)


def even_positive_tau(a: Any, b: Any, c: Any, N: int, n: int) -> Fraction:
    """tau_n in the variables of positive_even_params."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if n == 0:
        return Fraction(0)
    g = (b + c - 1) / 2
    den = 16 * (n + g) * (n + g + 1)
    if n % 2 == 0:
        return n * (N - n + a) * (n + c + 1) * (n + b + c + N + 1) / den
    return (N - n + 1) * (n + b - 1) * (n + b + c) * (n + a + b + c + N) / den


def odd_positive_tau(zeta: Any, xi: Any, chi: Any, N: int, n: int) -> Fraction:
    """tau_n in the variables of positive_odd_params."""
    zeta, xi, chi = Fraction(zeta), Fraction(xi), Fraction(chi)
    if n == 0:
        return Fraction(0)
    g = (zeta + chi - 1) / 2
    den = 16 * (n + g) * (n + g + 1)
    if n % 2 == 0:
        return n * (N - n + 1) * (n + chi) * (n + zeta + xi + chi + N + 1) / den
    return (N - n + xi + 1) * (n + zeta) * (n + zeta + chi) * (n + zeta + chi + N + 1) / den


def _force_truncation(tag: TruncationTag, params: ParamSet, N: int) -> ParamSet:
    half, step = Fraction(N + 1, 2), Fraction(N + 2, 2)
    forcing = {
        TruncationTag.EVEN_1: lambda p: p.with_values(r1=p.rho2 + half),
        TruncationTag.EVEN_2: lambda p: p.with_values(r2=p.rho2 + half),
        TruncationTag.EVEN_3: lambda p: p.with_values(rho1=-step - p.rho2),
        TruncationTag.ODD_I: lambda p: p.with_values(r1=p.rho1 + step),
        TruncationTag.ODD_II: lambda p: p.with_values(r2=half - p.r1),
        TruncationTag.ODD_III: lambda p: p.with_values(r2=p.rho1 + step),
    }
    return forcing[tag](params)


def _usable(check: Callable[[], Any]) -> bool:
    try:
        return bool(check())
    except (SingularParameterError, InadmissibleTruncationError, NotTruncatedError, ZeroDivisionError):
        return False


def truncated_params(tag: TruncationTag, N: int, seed: int, attempts: int = 500) -> ParamSet:
    """
    Generic rational parameters placed on the hyperplane of one truncation case.

    The draw is repeated until tau_1..tau_N are finite and nonzero, the
    classification returns the requested tag, the N+1 grid points are distinct
    and every weight is finite and nonzero.
    """
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        params = _force_truncation(tag, random_param_set(rng), N)

        def acceptable() -> bool:
            if any(cbi_tau(params, n) == 0 for n in range(1, N + 1)):
                return False
            case = classify_truncation(params, N)
            if case.tag is not tag:
                return False
            if len(set(spectral_grid(case, params))) != N + 1:
                return False
            return all(cbi_weight(case, params, k) != 0 for k in range(N + 1))

        if _usable(acceptable):
            return params
    raise DomainError(f"No usable parameters found for {tag.value} with N = {N}")


def classify_bi_truncation(params: ParamSet, N: int) -> BiTruncationCase:
    """
    Identify which factor of A_N C_{N+1} vanishes.

    Raises:
        InadmissibleTruncationError: For g = -(N+1)/2 with N odd
        NotTruncatedError: If A_N C_{N+1} != 0
    """
    rho1, rho2, r1, r2, g = params.rho1, params.rho2, params.r1, params.r2, params.g
    half = Fraction(N + 1, 2)
    if N % 2 == 1 and g == -half:
        raise InadmissibleTruncationError(f"g = -(N+1)/2 at N = {N} makes A_n singular")
    (a_num, _), _ = bi_coefficient_parts(rho1, rho2, r1, r2, N)
    _, (c_num, _) = bi_coefficient_parts(rho1, rho2, r1, r2, N + 1)
    if a_num * c_num != 0:
        raise NotTruncatedError(f"A_{N} C_{N + 1} is nonzero at {params}")
    if N % 2 == 0:
        checks = [
            (BiTruncationTag.EVEN_1, r1 - rho1 == half),
            (BiTruncationTag.EVEN_2, r2 - rho1 == half),
            (BiTruncationTag.EVEN_3, r1 - rho2 == half),
            (BiTruncationTag.EVEN_4, r2 - rho2 == half),
        ]
    else:
        checks = [
            (BiTruncationTag.ODD_I, rho1 + rho2 == -half),
            (BiTruncationTag.ODD_II, r1 + r2 == half),
        ]
    for tag, holds in checks:
        if holds:
            return BiTruncationCase(tag, N)
    raise InadmissibleTruncationError(f"A_{N} C_{N + 1} vanishes at {params} but no case applies")


def bi_spectral_grid(case: BiTruncationCase, params: ParamSet) -> List[Fraction]:
    if case.tag in (BiTruncationTag.EVEN_1, BiTruncationTag.EVEN_2):
        return [bi_grid(params.rho1, k) for k in range(case.N + 1)]
    if case.tag is BiTruncationTag.ODD_II:
        return [alternate_grid(params.r1, k) for k in range(case.N + 1)]
    return [bi_grid(params.rho2, k) for k in range(case.N + 1)]


def bi_case_weight(case: BiTruncationCase, params: ParamSet, k: int) -> Fraction:
    rho1, rho2, r1, r2 = params.rho1, params.rho2, params.r1, params.r2
    if case.tag in (BiTruncationTag.EVEN_1, BiTruncationTag.EVEN_2):
        return bi_weight(params, k)
    if case.tag is BiTruncationTag.ODD_II:
        return weight_function(-r1, -r2, -rho1, -rho2, k)
    return weight_function(rho2, rho1, r1, r2, k)


def verify_bi_orthogonality(case: BiTruncationCase, params: ParamSet) -> OrthoReport:
    """Exact Gram matrix of B_0..B_N; norm ratios are prod A_{j-1} C_j."""
    N = case.N
    grid = bi_spectral_grid(case, params)
    roots = bi_polynomial(params, N + 1)
    stray = [k for k, x in enumerate(grid) if roots(x) != 0]
    if stray:
        raise VerificationFailure(
            "Grid is not the root set of B_{N+1}",
            {"params": params.to_dict(), "case": case.to_dict(), "k": stray[:1]},
        )
    weights = [bi_case_weight(case, params, k) for k in range(N + 1)]
    products = []
    for j in range(1, N + 1):
        a_prev, _ = bi_coefficients(params, j - 1)
        _, c_j = bi_coefficients(params, j)
        products.append(a_prev * c_j)
    expected = list(accumulate([Fraction(1)] + products, mul))
    return _check_gram(
        "BI orthogonality",
        case.to_dict(),
        params,
        [bi_polynomial(params, n) for n in range(N + 1)],
        grid,
        weights,
        expected,
        tuple(u > 0 for u in products),
    )


def bi_truncated_params(tag: BiTruncationTag, N: int, seed: int, attempts: int = 500) -> ParamSet:
    rng = np.random.default_rng(seed)
    half = Fraction(N + 1, 2)
    forcing = {
        BiTruncationTag.EVEN_1: lambda p: p.with_values(r1=p.rho1 + half),
        BiTruncationTag.EVEN_2: lambda p: p.with_values(r2=p.rho1 + half),
        BiTruncationTag.EVEN_3: lambda p: p.with_values(r1=p.rho2 + half),
        BiTruncationTag.EVEN_4: lambda p: p.with_values(r2=p.rho2 + half),
        BiTruncationTag.ODD_I: lambda p: p.with_values(rho1=-half - p.rho2),
        BiTruncationTag.ODD_II: lambda p: p.with_values(r2=half - p.r1),
    }
    for _ in range(attempts):
        params = forcing[tag](random_param_set(rng))

        def acceptable() -> bool:
            for j in range(1, N + 1):
                a_prev, _ = bi_coefficients(params, j - 1)
                _, c_j = bi_coefficients(params, j)
                if a_prev * c_j == 0:
                    return False
            case = classify_bi_truncation(params, N)
            if case.tag is not tag:
                return False
            if len(set(bi_spectral_grid(case, params))) != N + 1:
                return False
            return all(bi_case_weight(case, params, k) != 0 for k in range(N + 1))

        if _usable(acceptable):
            return params
    raise DomainError(f"No usable parameters found for {tag.value} with N = {N}")
