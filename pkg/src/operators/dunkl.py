#!/usr/bin/env python
"""
Dunkl shift operators diagonalized by the CBI polynomials.

The coefficient functions are generic in their arguments: with x the
rational function x and rational parameters they build the operators,
with a rational sample x and a symbolic rho1 they feed the rho1 limit.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List

from exact.rat_func import RatFunc
from exact.scalar import HALF, QUARTER
from exact.uni_poly import UniPoly
from models.param_set import ParamSet
from models.reports import EigenFailure, EigenReport
from cbi_family import cbi_polynomial
from operators.shift_reflect_op import ShiftReflectOp, op_apply

ZERO = Fraction(0)
ONE = Fraction(1)


def omega(rho1: Any, r1: Any, r2: Any) -> Any:
    return 4 * rho1 - 4 * (r1 + r2) * rho1 + 4 * r1 * r2 - 6 * (r1 + r2) + 5


def d0_coefficients(x: Any, rho1: Any, rho2: Any, r1: Any, r2: Any) -> Dict[str, Any]:
    """The coefficients A, B, C, D of the T^+, T^-, R and T^+R terms of D_0."""
    a = (x + rho1 + 1) * (x + rho2 + 1) * (2 * x - 2 * r1 + 1) * (2 * x - 2 * r2 + 1) / (8 * (x + 1) * (2 * x + 1))
    b = (x - rho2) * (x - rho1 - 1) * (2 * x + 2 * r1 - 1) * (2 * x + 2 * r2 - 1) / (8 * x * (2 * x - 1))
    c = (
        (x - rho2) * (4 * x * x + omega(rho1, r1, r2)) / (8 * x)
        - (x - rho2) * (x + rho1 + 1) * (2 * x - 2 * r1 + 1) * (2 * x - 2 * r2 + 1) / (8 * x * (2 * x + 1))
        - b
    )
    d = rho2 * (x + rho1 + 1) * (2 * x - 2 * r1 + 1) * (2 * x - 2 * r2 + 1) / (8 * x * (x + 1) * (2 * x + 1))
    return {"A": a, "B": b, "C": c, "D": d}


def hidden_coefficient(x: Any, rho2: Any) -> Any:
    """(x - rho2)/(2x), the coefficient of the hidden operator U."""
    return (x - rho2) / (2 * x)


def five_term_operator(a: RatFunc, b: RatFunc, c: RatFunc, d: RatFunc) -> ShiftReflectOp:
    """a T^+ + b T^- + c R + d T^+R - (a + b + c + d) I."""
    return ShiftReflectOp({
        (ONE, False): a,
        (-ONE, False): b,
        (ZERO, True): c,
        (ONE, True): d,
        (ZERO, False): -(a + b + c + d),
    })


def build_D0(params: ParamSet) -> ShiftReflectOp:
    coefficients = d0_coefficients(RatFunc.x(), params.rho1, params.rho2, params.r1, params.r2)
    return five_term_operator(coefficients["A"], coefficients["B"], coefficients["C"], coefficients["D"])


def build_U(params: ParamSet) -> ShiftReflectOp:
    """((x - rho2)/(2x)) (I - R)."""
    u = hidden_coefficient(RatFunc.x(), params.rho2)
    return ShiftReflectOp({(ZERO, False): u, (ZERO, True): -u})


def build_D_alpha(params: ParamSet, alpha: Any) -> ShiftReflectOp:
    return build_D0(params) + Fraction(alpha) * build_U(params)


def eigenvalue_lambda(params: ParamSet, alpha: Any, n: int) -> Fraction:
    m = n // 2
    if n % 2 == 0:
        return m * m + (params.g + 1) * m
    return m * m + (params.g + 2) * m + Fraction(alpha)


def phi_coefficients(y: Any, params: ParamSet) -> List[Any]:
    """Phi_1..Phi_5 of the y-variable operator H."""
    rho1, rho2, r1, r2, g = params.rho1, params.rho2, params.r1, params.r2, params.g
    q1, q3 = QUARTER, 3 * QUARTER
    nu = r1 + r2 + 2 * r1 * r2 - 2 * rho1 - 2 * (r1 + r2) * rho1 - 4 * rho2 + Fraction(1, 8) - 2 * g * g
    phi1 = (y + rho1 + q3) * (y + rho2 + q3) * (y - r1 + q1) * (y - r2 + q1) / (4 * (y + q1) * (y + q3))
    phi2 = (y - rho1 - 5 * q1) * (y - rho2 - q1) * (y + r1 - q3) * (y + r2 - q3) / (4 * (y - q1) * (y - q3))
    phi3 = (y + rho1 + q3) * (y - rho2 - q1) * (y - r1 + q1) * (y - r2 + q1) / (4 * (y - q1) * (y + q1))
    phi4 = (y + rho1 + q3) * (y + rho2 - q1) * (y - r1 + q1) * (y - r2 + q1) / (4 * (y - q1) * (y + q1))
    phi5 = (y - rho2 - q1) * (2 * y * y - y + nu) / (4 * (y - q1))
    return [phi1, phi2, phi3, phi4, phi5]


def build_H_y(params: ParamSet) -> ShiftReflectOp:
    phi1, phi2, phi3, phi4, phi5 = phi_coefficients(RatFunc.x(), params)
    return ShiftReflectOp({
        (ONE, False): phi1,
        (HALF, True): phi4 - phi1,
        (ZERO, False): phi3 - phi4 - phi5,
        (-HALF, True): phi5 - phi2 - phi3,
        (-ONE, False): phi2,
    })


def hidden_alpha(params: ParamSet) -> Fraction:
    """The family member g^2 + 2g + 5/4 that H realizes after a quarter shift."""
    g = params.g
    return g * g + 2 * g + Fraction(5, 4)


def eigenvalue_kappa(params: ParamSet, n: int) -> Fraction:
    m = n // 2
    if n % 2 == 0:
        return m * m + (params.g + 1) * m
    return m * m + (params.g + 2) * m + hidden_alpha(params)


def conjugated_H(params: ParamSet) -> ShiftReflectOp:
    """T^{1/4} H T^{-1/4}, which acts on polynomials in x = y - 1/4."""
    return build_H_y(params).conjugate_by_shift(QUARTER)


def verify_eigen(params: ParamSet, alpha: Any, max_n: int) -> EigenReport:
    """Sweep D_alpha I_n - Lambda_n I_n for n <= max_n."""
    operator = build_D_alpha(params, alpha)
    failures = []
    for n in range(max_n + 1):
        poly = cbi_polynomial(params, n)
        residual = op_apply(operator, poly) - eigenvalue_lambda(params, alpha, n) * poly
        if not residual.is_zero():
            logging.error(f"Eigen equation failed at n={n} for {params}, alpha={alpha}: {residual}")
            failures.append(EigenFailure(n, str(residual)))
    logging.debug(f"Eigen sweep for {params}, alpha={alpha}: {len(failures)} failures up to n={max_n}")
    return EigenReport("D_alpha I_n = Lambda_n I_n", params, Fraction(alpha), max_n, tuple(failures))


def verify_hidden(params: ParamSet, max_n: int) -> EigenReport:
    """U I_n = (n mod 2) I_n."""
    operator = build_U(params)
    failures = []
    for n in range(max_n + 1):
        poly = cbi_polynomial(params, n)
        residual = op_apply(operator, poly) - (n % 2) * poly
        if not residual.is_zero():
            failures.append(EigenFailure(n, str(residual)))
    return EigenReport("U I_n = (n mod 2) I_n", params, ZERO, max_n, tuple(failures))


def verify_kappa(params: ParamSet, max_n: int) -> EigenReport:
    """H I_n(y - 1/4) = kappa_n I_n(y - 1/4), plus kappa_n = Lambda_n at the hidden alpha."""
    operator = build_H_y(params)
    star = hidden_alpha(params)
    failures = []
    for n in range(max_n + 1):
        shifted = cbi_polynomial(params, n).affine_substitute(1, -QUARTER)
        kappa = eigenvalue_kappa(params, n)
        residual = op_apply(operator, shifted) - kappa * shifted
        if not residual.is_zero():
            failures.append(EigenFailure(n, str(residual)))
        elif kappa != eigenvalue_lambda(params, star, n):
            failures.append(EigenFailure(n, f"kappa_n differs from Lambda_n: {kappa}"))
    return EigenReport("H I_n(y-1/4) = kappa_n I_n(y-1/4)", params, star, max_n, tuple(failures))


def verify_hidden_identity(params: ParamSet) -> bool:
    """Whether T^{1/4} H T^{-1/4} equals D_{g^2+2g+5/4} as a normal form."""
    return conjugated_H(params) == build_D_alpha(params, hidden_alpha(params))


def pointwise_action(op: ShiftReflectOp, p: UniPoly, x: Fraction) -> Fraction:
    """(op p)(x) evaluated directly from the terms, without normal-form algebra."""
    total = ZERO
    for (shift, reflect), value in op.evaluate_terms(x).items():
        point = -x - shift if reflect else x + shift
        total += value * p(point)
    return total
