#!/usr/bin/env python
"""
Askey-Wilson recurrence in complex double precision and its q -> -1 limit.

The recurrence coefficients alpha_n, gamma_n belong to the normalization in
which p_n is the bare 4phi3 sum (p_n(a) = 1); aw_polynomial returns the
prefactored polynomial and aw_normalized the bare sum.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from errors import ConditioningError, DomainError, LimitFailure
from models.param_set import AWParams, ParamSet
from models.reports import LimitRow, NumericLimitReport
from limits_bridge import aw_limit_coeffs

CONDITIONING_THRESHOLD = 1e-12
RATIO_WINDOW = (5.0, 20.0)
FINAL_ERROR_FACTOR = 50.0
# Errors below this are rounding noise and carry no convergence rate.
NOISE_FLOOR = 1e-12


def _guard(value: complex, what: str) -> complex:
    if abs(value) < CONDITIONING_THRESHOLD:
        raise ConditioningError(f"{what} is {abs(value):.3e}, below {CONDITIONING_THRESHOLD:.0e}")
    return value


def q_pochhammer(a: complex, q: complex, n: int) -> complex:
    """(a; q)_n = prod_{k<n} (1 - a q^k)."""
    if n == 0:
        return complex(1.0)
    return complex(np.prod(1.0 - a * q ** np.arange(n)))


def aw_recurrence_coeffs(p: AWParams, n: int) -> Tuple[complex, complex]:
    """
    alpha_n and gamma_n of the Askey-Wilson recurrence.

    Raises:
        ConditioningError: If a denominator factor is within 1e-12 of zero
    """
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    abcd = a * b * c * d
    alpha_den = a * _guard(1 - abcd * q ** (2 * n - 1), "1 - abcd q^(2n-1)") * _guard(1 - abcd * q ** (2 * n), "1 - abcd q^(2n)")
    alpha = (1 - a * b * q ** n) * (1 - a * c * q ** n) * (1 - a * d * q ** n) * (1 - abcd * q ** (n - 1)) / alpha_den
    if n == 0:
        return complex(alpha), complex(0.0)
    gamma_den = _guard(1 - abcd * q ** (2 * n - 2), "1 - abcd q^(2n-2)") * _guard(1 - abcd * q ** (2 * n - 1), "1 - abcd q^(2n-1)")
    gamma = a * (1 - q ** n) * (1 - b * c * q ** (n - 1)) * (1 - b * d * q ** (n - 1)) * (1 - c * d * q ** (n - 1)) / gamma_den
    return complex(alpha), complex(gamma)


def aw_normalized(p: AWParams, z: complex, n: int) -> complex:
    """
    The terminating sum 4phi3(q^-n, abcd q^(n-1), az, a/z; ab, ac, ad; q, q).

    Raises:
        ConditioningError: Near a zero of a lower q-Pochhammer symbol
    """
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    upper = (q ** (-n), a * b * c * d * q ** (n - 1), a * z, a / z)
    lower = (a * b, a * c, a * d, q)
    total = complex(1.0)
    term = complex(1.0)
    for k in range(n):
        ratio = np.prod([1 - u * q ** k for u in upper])
        den = _guard(complex(np.prod([1 - v * q ** k for v in lower])), f"lower q-Pochhammer factor at k = {k}")
        term = term * ratio / den * q
        total += term
    return complex(total)


def aw_polynomial(p: AWParams, z: complex, n: int) -> complex:
    """a^-n (ab, ac, ad; q)_n times the normalized sum."""
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    prefactor = a ** (-n) * q_pochhammer(a * b, q, n) * q_pochhammer(a * c, q, n) * q_pochhammer(a * d, q, n)
    return complex(prefactor * aw_normalized(p, z, n))


def aw_recurrence_residuals(p: AWParams, z: complex, n_max: int) -> List[float]:
    """
    Scale-relative residuals of the recurrence for n = 0..n_max.

    Each residual is divided by the largest magnitude among its terms.
    """
    values = [aw_normalized(p, z, n) for n in range(n_max + 2)]
    shift = p.a + 1 / p.a
    argument = z + 1 / z
    residuals = []
    for n in range(n_max + 1):
        alpha, gamma = aw_recurrence_coeffs(p, n)
        below = values[n - 1] if n > 0 else 0.0
        terms = [alpha * values[n + 1], (shift - alpha - gamma) * values[n], gamma * below, -argument * values[n]]
        scale = max(1.0, max(abs(t) for t in terms))
        residuals.append(float(abs(sum(terms)) / scale))
    return residuals


def aw_limit_params(params: ParamSet, eps: float) -> AWParams:
    """Askey-Wilson parameters approaching the CBI family as eps -> 0 (q -> -1)."""
    rho1, rho2, r1, r2 = (float(v) for v in (params.rho1, params.rho2, params.r1, params.r2))
    return AWParams(
        a=1j * np.exp(eps * (2 * rho1 + 1.5)),
        b=-1j * np.exp(eps * (2 * rho2 + 0.5)),
        c=1j * np.exp(eps * (-2 * r2 + 0.5)),
        d=1j * np.exp(eps * (-2 * r1 + 0.5)),
        q=-np.exp(eps),
    )


def scaled_limit_coeffs(params: ParamSet, eps: float, n: int) -> Tuple[complex, complex]:
    """alpha_n and gamma_n divided by 4i(1 + q), which tend to alpha*_n and gamma*_n."""
    aw = aw_limit_params(params, eps)
    alpha, gamma = aw_recurrence_coeffs(aw, n)
    scale = 4j * (1 + aw.q)
    return alpha / scale, gamma / scale


def _ratio(previous: Optional[float], current: float) -> Optional[float]:
    if previous is None or previous < NOISE_FLOOR or current < NOISE_FLOOR:
        return None
    return previous / current


def verify_aw_limit(params: ParamSet, n_max: int = 6, eps_list: Sequence[float] = (1e-3, 1e-4, 1e-5)) -> NumericLimitReport:
    """
    First-order convergence of the scaled recurrence coefficients.

    Successive errors must shrink by a factor within RATIO_WINDOW and the
    error at the smallest eps must stay below 50 eps. Rows whose errors sit
    at the noise floor are reported without a ratio.

    Raises:
        DomainError: If eps_list is not strictly decreasing and positive
    """
    eps_list = tuple(float(e) for e in eps_list)
    if not eps_list or any(e <= 0 for e in eps_list) or any(b >= a for a, b in zip(eps_list, eps_list[1:])):
        raise DomainError(f"eps values must be positive and strictly decreasing, got {list(eps_list)}")
    rows: List[LimitRow] = []
    failures: List[str] = []
    for n in range(n_max + 1):
        targets = dict(zip(("alpha", "gamma"), (float(v) for v in aw_limit_coeffs(params, n))))
        previous: Dict[str, Optional[float]] = {"alpha": None, "gamma": None}
        for eps in eps_list:
            values = dict(zip(("alpha", "gamma"), scaled_limit_coeffs(params, eps, n)))
            for quantity in ("alpha", "gamma"):
                error = float(abs(values[quantity] - targets[quantity]))
                ratio = _ratio(previous[quantity], error)
                rows.append(LimitRow(n, quantity, eps, error, ratio, float(abs(values[quantity].imag))))
                if ratio is not None and not RATIO_WINDOW[0] <= ratio <= RATIO_WINDOW[1]:
                    failures.append(f"n={n} {quantity} eps={eps:g}: ratio {ratio:.3f} outside {list(RATIO_WINDOW)}")
                previous[quantity] = error
        final = eps_list[-1]
        for quantity in ("alpha", "gamma"):
            if previous[quantity] >= FINAL_ERROR_FACTOR * final:
                failures.append(f"n={n} {quantity}: final error {previous[quantity]:.3e} >= {FINAL_ERROR_FACTOR:g} eps")
    report = NumericLimitReport(params, eps_list, tuple(rows), tuple(failures))
    logging.info(f"Askey-Wilson limit at {params}: {len(rows)} rows, {len(failures)} failures")
    return report


def require_aw_limit(params: ParamSet, n_max: int = 6, eps_list: Sequence[float] = (1e-3, 1e-4, 1e-5)) -> NumericLimitReport:
    """
    Raises:
        LimitFailure: Carrying the error table when convergence fails
    """
    report = verify_aw_limit(params, n_max, eps_list)
    if not report.passed:
        raise LimitFailure("Askey-Wilson recurrence does not converge to the limit recurrence", report.to_dict())
    return report


def random_points(seed: int, count: int) -> List[complex]:
    """Points z in an annulus around the unit circle, off the real axis."""
    rng = np.random.default_rng(seed)
    radius = rng.uniform(0.6, 1.6, count)
    angle = rng.uniform(0.1, 1.4, count)
    return [complex(r * np.exp(1j * t)) for r, t in zip(radius, angle)]
