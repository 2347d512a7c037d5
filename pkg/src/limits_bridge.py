#!/usr/bin/env python
"""
Families reached from the CBI polynomials by limits and specializations.

Covers the dual -1 Hahn polynomials (rho1 -> infinity), the symmetric Hahn
and para-Krawtchouk specializations, and the exact recurrence coefficients
of the q -> -1 limit of the Askey-Wilson polynomials.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

from errors import DomainError, LimitFailure, SingularParameterError, VerificationFailure
from exact.hypergeometric import limit_at_infinity, pfq_terminating
from exact.rat_func import RatFunc
from exact.scalar import HALF, format_rational, pochhammer
from exact.uni_poly import UniPoly
from models.param_set import DualHahnParams, ParamSet
from cbi_family import cbi_polynomial, cbi_tau, recurrence_diagonal, tau_parts
from cbi_algebra import ActionMap, build_K2, build_P, structure_constants
from operators.dunkl import (
    build_D_alpha,
    d0_coefficients,
    eigenvalue_lambda,
    hidden_coefficient,
    verify_eigen,
)
from operators.shift_reflect_op import ShiftReflectOp, anticommutator, commutator, op_apply

ZERO = Fraction(0)
ONE = Fraction(1)
X = UniPoly.x()

DEFAULT_SAMPLES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DUAL_HAHN_RELATIONS = (
    "[K1,P] = 0",
    "{K2,P} = 2 g3",
    "{K3,P} = 0",
    "[K1,K2] = K3",
    "[K1,K3]",
    "[K3,K2]",
    "P^2 = I",
)

# Term keys of a five-term operator in the order they are reported.
FIVE_TERM_KEYS = ((ONE, False), (-ONE, False), (ZERO, True), (ONE, True), (ZERO, False))


def _as_poly(value: Any) -> UniPoly:
    return value if isinstance(value, UniPoly) else UniPoly.constant(value)


def dual_m1_hahn_sigma(p: DualHahnParams, n: int) -> Fraction:
    """sigma_n of the dual -1 Hahn recurrence Q_{n+1} + (-1)^n rho2 Q_n + sigma_n Q_{n-1} = x Q_n."""
    m = n // 2
    if n % 2 == 0:
        return -m * (m - p.r1 - p.r2)
    return -(m + p.rho2 - p.r1 + HALF) * (m + p.rho2 - p.r2 + HALF)


@lru_cache(maxsize=128)
def _dual_hahn_sequence(p: DualHahnParams, n: int) -> Tuple[UniPoly, ...]:
    polys = [UniPoly.constant(1)]
    for k in range(n):
        diagonal = p.rho2 if k % 2 == 0 else -p.rho2
        step = (X - diagonal) * polys[k]
        if k > 0:
            step = step - dual_m1_hahn_sigma(p, k) * polys[k - 1]
        polys.append(step)
    return tuple(polys)


def dual_m1_hahn_recurrence_poly(p: DualHahnParams, n: int) -> UniPoly:
    return _dual_hahn_sequence(p, n)[n]


def dual_m1_hahn_poly(p: DualHahnParams, n: int) -> UniPoly:
    """
    Monic Q_n from its terminating 3F2 representation.

    Raises:
        SingularParameterError: If a lower Pochhammer vanishes in range
    """
    m = n // 2
    rho2, r1, r2 = p.rho2, p.r1, p.r2
    if n % 2 == 0:
        lower = [rho2 - r1 + HALF, rho2 - r2 + HALF]
        xi = pochhammer(lower[0], m) * pochhammer(lower[1], m)
        return UniPoly.constant(1) * (xi * pfq_terminating([Fraction(-m), X + rho2, rho2 - X], lower))
    lower = [rho2 - r1 + 3 * HALF, rho2 - r2 + 3 * HALF]
    xi = pochhammer(lower[0], m) * pochhammer(lower[1], m)
    return (X - rho2) * (xi * pfq_terminating([Fraction(-m), X + rho2 + 1, rho2 + 1 - X], lower))


def dual_hahn_recurrence_residual(p: DualHahnParams, n: int) -> UniPoly:
    """Q_{n+1} + (-1)^n rho2 Q_n + sigma_n Q_{n-1} - x Q_n with Q from the 3F2 form."""
    diagonal = p.rho2 if n % 2 == 0 else -p.rho2
    residual = dual_m1_hahn_poly(p, n + 1) + diagonal * dual_m1_hahn_poly(p, n) - X * dual_m1_hahn_poly(p, n)
    if n > 0:
        residual = residual + dual_m1_hahn_sigma(p, n) * dual_m1_hahn_poly(p, n - 1)
    return residual


def e_coefficients(x: Any, rho2: Any, r1: Any, r2: Any) -> Dict[str, Any]:
    """The coefficients I, J, K, L of the T^+, T^-, R and T^+R terms of E_0."""
    i = (x + rho2 + 1) * (2 * x - 2 * r1 + 1) * (2 * x - 2 * r2 + 1) / (8 * (x + 1) * (2 * x + 1))
    j = (rho2 - x) * (2 * x + 2 * r1 - 1) * (2 * x + 2 * r2 - 1) / (8 * x * (2 * x - 1))
    k = (x - rho2) * (4 * x * x + 4 * r1 * r2 - 1) / (4 * x * (4 * x * x - 1))
    l = rho2 * (2 * x - 2 * r1 + 1) * (2 * x - 2 * r2 + 1) / (8 * x * (x + 1) * (2 * x + 1))
    return {"I": i, "J": j, "K": k, "L": l}


def build_E_alpha(p: DualHahnParams, alpha: Any) -> ShiftReflectOp:
    """E_0 + alpha ((x - rho2)/(2x)) (I - R)."""
    x = RatFunc.x()
    c = e_coefficients(x, p.rho2, p.r1, p.r2)
    u = Fraction(alpha) * hidden_coefficient(x, p.rho2)
    return ShiftReflectOp({
        (ONE, False): c["I"],
        (-ONE, False): c["J"],
        (ZERO, True): c["K"] - u,
        (ONE, True): c["L"],
        (ZERO, False): -(c["I"] + c["J"] + c["K"] + c["L"]) + u,
    })


def eigenvalue_nu(alpha: Any, n: int) -> Fraction:
    m = n // 2
    return Fraction(m) if n % 2 == 0 else m + Fraction(alpha)


def verify_dual_hahn_eigen(p: DualHahnParams, alpha: Any, max_n: int) -> List[int]:
    """Degrees n <= max_n where E_alpha Q_n != nu_n Q_n."""
    operator = build_E_alpha(p, alpha)
    failures = []
    for n in range(max_n + 1):
        poly = dual_m1_hahn_recurrence_poly(p, n)
        if op_apply(operator, poly) != eigenvalue_nu(alpha, n) * poly:
            logging.error(f"Dual -1 Hahn eigen equation failed at n={n} for {p.to_dict()}, alpha={alpha}")
            failures.append(n)
    return failures


def _scaled_d_alpha_terms(x: Fraction, p: DualHahnParams, alpha: Fraction) -> Dict[Tuple[Fraction, bool], RatFunc]:
    """Coefficients of D_(alpha rho1) at a sample x as rational functions of rho1."""
    rho1 = RatFunc.x()
    c = d0_coefficients(x, rho1, p.rho2, p.r1, p.r2)
    u = (alpha * hidden_coefficient(x, p.rho2)) * rho1
    return {
        (ONE, False): c["A"],
        (-ONE, False): c["B"],
        (ZERO, True): c["C"] - u,
        (ONE, True): c["D"],
        (ZERO, False): -(c["A"] + c["B"] + c["C"] + c["D"]) + u,
    }


def _coefficient_degree(op: ShiftReflectOp) -> int:
    return max(max(value.num.degree, value.den.degree) for value in op.terms.values())


def verify_dual_hahn_limit(p: DualHahnParams, alpha: Any, n_max: int = 12, x_samples: Sequence[Any] = DEFAULT_SAMPLES) -> Dict[str, Any]:
    """
    Exact rho1 -> infinity limits from the CBI family to the dual -1 Hahn family.

    (a) tau_n, a rational function of rho1, tends to sigma_n for n <= n_max.
    (b) At every sample x and for every term, the coefficient of
        D_(alpha rho1) divided by rho1 tends to the coefficient of E_alpha.
    (c) Lambda_n / rho1 tends to nu_n.

    Raises:
        DomainError: If there are too few samples to certify (b) by degree count
        LimitFailure: On the first mismatching limit
    """
    alpha = Fraction(alpha)
    samples = [Fraction(x) for x in x_samples]
    target = build_E_alpha(p, alpha)
    degree = _coefficient_degree(target)
    if len(samples) <= 2 * degree:
        raise DomainError(f"{len(samples)} samples cannot certify coefficients of degree {degree}")
    witness = {"params": p.to_dict(), "alpha": format_rational(alpha)}
    rho1 = UniPoly.x()

    for n in range(n_max + 1):
        num, den = tau_parts(rho1, p.rho2, p.r1, p.r2, n)
        limit = limit_at_infinity(_as_poly(num), _as_poly(den))
        if limit != dual_m1_hahn_sigma(p, n):
            raise LimitFailure(f"tau_{n} does not tend to sigma_{n}", {**witness, "n": n, "limit": format_rational(limit)})

    for x in samples:
        scaled = _scaled_d_alpha_terms(x, p, alpha)
        for key in FIVE_TERM_KEYS:
            value = scaled[key]
            limit = limit_at_infinity(value.num, value.den * rho1)
            expected = target.coefficient(*key)(x)
            if limit != expected:
                raise LimitFailure(
                    "Operator coefficient limit differs from E_alpha",
                    {**witness, "x": format_rational(x), "shift": format_rational(key[0]), "reflect": key[1]},
                )

    for n in range(n_max + 1):
        m = n // 2
        if n % 2 == 0:
            num = m * m + (rho1 + p.rho2 - p.r1 - p.r2 + 1) * m
        else:
            num = m * m + (rho1 + p.rho2 - p.r1 - p.r2 + 2) * m + alpha * rho1
        limit = limit_at_infinity(_as_poly(num), rho1)
        if limit != eigenvalue_nu(alpha, n):
            raise LimitFailure(f"Lambda_{n}/rho1 does not tend to nu_{n}", {**witness, "n": n})

    logging.info(f"Dual -1 Hahn limits hold for {p.to_dict()} at {len(samples)} samples, n <= {n_max}")
    return {**witness, "passed": True, "n_max": n_max, "samples": [format_rational(x) for x in samples], "coefficient_degree": degree}


def dual_hahn_structure_constants(p: DualHahnParams, alpha: Any) -> Tuple[Fraction, ...]:
    """(gamma1, ..., gamma5)."""
    alpha = Fraction(alpha)
    rho2, r1, r2 = p.rho2, p.r1, p.r2
    return (
        alpha * (1 - alpha),
        1 - 2 * alpha,
        rho2,
        alpha * (2 * rho2 * rho2 - rho2 + HALF) + rho2 * (1 - r2 - r1) + r1 * r2 - Fraction(1, 4),
        (2 * alpha * rho2 - alpha - r1 - r2 + 1) / 2,
    )


def dual_hahn_relation_residuals(k1: Any, k2: Any, k3: Any, p: Any, identity: Any, gammas: Sequence[Fraction]) -> Dict[str, Any]:
    g1, g2, g3, g4, g5 = gammas
    return {
        "[K1,P] = 0": commutator(k1, p),
        "{K2,P} = 2 g3": anticommutator(k2, p) - (2 * g3) * identity,
        "{K3,P} = 0": anticommutator(k3, p),
        "[K1,K2] = K3": commutator(k1, k2) - k3,
        "[K1,K3]": commutator(k1, k3) - (g1 * k2 - (g1 * g3) * p - g2 * (k3 @ p)),
        "[K3,K2]": commutator(k3, k2) - (
            g2 * (k2 @ k2 @ p)
            + (2 * g3) * (k1 @ p)
            + (2 * g3) * (k3 @ p)
            + k1
            + g4 * p
            + g5 * identity
        ),
        "P^2 = I": p @ p - identity,
    }


def dual_hahn_algebra_check(p: DualHahnParams, alpha: Any, max_degree: int = 16) -> Dict[str, Any]:
    """
    Reduced algebra with K1 = E_alpha, K2 = x and the CBI involution P.

    Raises:
        VerificationFailure: If a relation fails as a normal form or on monomials
    """
    alpha = Fraction(alpha)
    lifted = ParamSet(ZERO, p.rho2, p.r1, p.r2)
    k1, k2, pp = build_E_alpha(p, alpha), build_K2(), build_P(lifted)
    k3 = commutator(k1, k2)
    gammas = dual_hahn_structure_constants(p, alpha)
    normal = dual_hahn_relation_residuals(k1, k2, k3, pp, ShiftReflectOp.identity(), gammas)
    acted = dual_hahn_relation_residuals(
        ActionMap.of(k1), ActionMap.of(k2), ActionMap.of(k3), ActionMap.of(pp), ActionMap.identity(), gammas
    )
    results = {}
    for name in DUAL_HAHN_RELATIONS:
        normal_ok = normal[name].is_zero()
        action_ok = all(acted[name](UniPoly.monomial(m)).is_zero() for m in range(max_degree + 1))
        if not (normal_ok and action_ok):
            raise VerificationFailure(
                f"Dual -1 Hahn relation {name} fails",
                {"relation": name, "params": p.to_dict(), "alpha": format_rational(alpha), "normal_form": normal_ok},
            )
        results[name] = True
    return {
        "params": p.to_dict(),
        "alpha": format_rational(alpha),
        "passed": True,
        "gammas": [format_rational(g) for g in gammas],
        "relations": results,
    }


def symmetric_hahn_omega(N: int, r2: Fraction, n: int) -> Fraction:
    """omega_n of the symmetric Hahn recurrence with alpha* = beta* = -r1 - r2 and r1 = (N+1)/2."""
    s = -2 * (Fraction(N + 1, 2) + r2)
    den = 4 * (2 * n + s - 1) * (2 * n + s + 1)
    if den == 0:
        raise SingularParameterError(f"omega_{n} is singular at r2 = {format_rational(r2)}", n=n)
    return n * (N - n + 1) * (n + s) * (n + s + N + 1) / den


def symmetric_hahn_reduction(r1: Any, r2: Any, N: int = None, max_n: int = 12) -> Dict[str, Any]:
    """
    D_alpha at rho1 = -1/2, rho2 = 0, alpha = (1 - r1 - r2)/2.

    Asserts the reflection terms vanish identically, that 4 D_alpha is the
    three-term Hahn operator B T^+ - (B + D) + D T^- with eigenvalues
    n(n - 2r1 - 2r2 + 1), and that d2 = d3 = d4 = 0. With N given, r1 is
    replaced by (N+1)/2 and tau_n = omega_n is checked for n <= N + 1.

    Raises:
        VerificationFailure: On the first violated claim
    """
    r1, r2 = Fraction(r1), Fraction(r2)
    if N is not None:
        r1 = Fraction(N + 1, 2)
    params = ParamSet(-HALF, ZERO, r1, r2)
    s = r1 + r2
    alpha = (1 - s) / 2
    witness = {"params": params.to_dict(), "alpha": format_rational(alpha)}
    operator = build_D_alpha(params, alpha)
    if operator.has_reflection():
        raise VerificationFailure("Reflection terms survive the symmetric Hahn specialization", witness)
    x = RatFunc.x()
    b = (x - r1 + HALF) * (x - r2 + HALF)
    d = (x + r1 - HALF) * (x + r2 - HALF)
    hahn = ShiftReflectOp({(ONE, False): b, (-ONE, False): d, (ZERO, False): -(b + d)})
    if 4 * operator != hahn:
        raise VerificationFailure("4 D_alpha is not the three-term Hahn operator", witness)
    for n in range(max_n + 1):
        if 4 * eigenvalue_lambda(params, alpha, n) != n * (n - 2 * s + 1):
            raise VerificationFailure(f"4 Lambda_{n} differs from n(n - 2r1 - 2r2 + 1)", {**witness, "n": n})
    if not verify_eigen(params, alpha, max_n).passed:
        raise VerificationFailure("Eigen equation fails under the symmetric Hahn specialization", witness)
    constants = structure_constants(params, alpha)
    if (constants.d2, constants.d3, constants.d4) != (0, 0, 0):
        raise VerificationFailure("d2, d3, d4 do not all vanish", {**witness, "constants": constants.to_dict()})

    stated_d1, stated_d5 = s / 4, (r1 - HALF) * (r2 - HALF) / 4
    corrected_d1, corrected_d5 = s * (s - 1) / 4, (r1 - HALF) * (r2 - HALF) / 2
    report: Dict[str, Any] = {
        **witness,
        "constants": constants.to_dict(),
        "d1": {
            "stated": format_rational(stated_d1),
            "stated_matches": constants.d1 == stated_d1,
            "corrected": format_rational(corrected_d1),
            "corrected_matches": constants.d1 == corrected_d1,
        },
        "d5": {
            "stated": format_rational(stated_d5),
            "stated_matches": constants.d5 == stated_d5,
            "corrected": format_rational(corrected_d5),
            "corrected_matches": constants.d5 == corrected_d5,
        },
    }
    report["passed"] = report["d1"]["corrected_matches"] and report["d5"]["corrected_matches"]
    if N is not None:
        for n in range(1, N + 2):
            if recurrence_diagonal(params, n) != 0 or cbi_tau(params, n) != symmetric_hahn_omega(N, r2, n):
                raise VerificationFailure(f"tau_{n} differs from omega_{n}", {**witness, "n": n, "N": N})
        report["N"] = N
        report["omega"] = [format_rational(symmetric_hahn_omega(N, r2, n)) for n in range(1, N + 2)]
    return report


def alternate_symmetric_hahn(rho1: Any, r: Any, vanishing: str = "r1", max_n: int = 10) -> Dict[str, Any]:
    """
    The two other three-term reductions of D_alpha.

    vanishing = "r1": rho2 = r1 = 0, alpha = (2 rho1 - 2 r2 + 3)/4 with r2 = r.
    vanishing = "r2": rho2 = r2 = 0, alpha = (2 rho1 - 2 r1 + 3)/4 with r1 = r.
    The T^- coefficient is the mirror image c(-x) of the T^+ coefficient.
    """
    rho1, r = Fraction(rho1), Fraction(r)
    if vanishing == "r1":
        params = ParamSet(rho1, ZERO, ZERO, r)
    elif vanishing == "r2":
        params = ParamSet(rho1, ZERO, r, ZERO)
    else:
        raise DomainError(f"vanishing must be 'r1' or 'r2', got {vanishing!r}")
    alpha = (2 * rho1 - 2 * r + 3) / 4
    witness = {"params": params.to_dict(), "alpha": format_rational(alpha), "vanishing": vanishing}
    operator = build_D_alpha(params, alpha)
    if operator.has_reflection():
        raise VerificationFailure("Reflection terms survive the alternate specialization", witness)
    forward = operator.coefficient(1)
    if operator.coefficient(-1) != forward.affine_substitute(-1, 0):
        raise VerificationFailure("T^- coefficient is not the mirror of the T^+ coefficient", witness)
    if not verify_eigen(params, alpha, max_n).passed:
        raise VerificationFailure("Eigen equation fails under the alternate specialization", witness)
    return {**witness, "passed": True, "t_plus": forward.to_json()}


def para_krawtchouk_params(N: int, gamma: Any) -> Tuple[ParamSet, Fraction]:
    """
    Para-Krawtchouk specialization for odd N.

    Raises:
        DomainError: If N is not a positive odd integer
    """
    if N < 1 or N % 2 == 0:
        raise DomainError(f"Para-Krawtchouk needs a positive odd N, got {N}")
    gamma = Fraction(gamma)
    params = ParamSet((gamma - N - 3) / 4, ZERO, (N + 1 + gamma) / 4, ZERO)
    return params, Fraction(1 - N, 4)


def aw_limit_coeffs(params: ParamSet, n: int) -> Tuple[Fraction, Fraction]:
    """
    (alpha*_n, gamma*_n) of the q -> -1 limit recurrence.

    Raises:
        SingularParameterError: If 2m + g + 1 or 2m + g + 2 vanishes
    """
    rho1, rho2, r1, r2, g = params.rho1, params.rho2, params.r1, params.r2, params.g
    m = n // 2
    den = 2 * m + g + 1 if n % 2 == 0 else 2 * m + g + 2
    if den == 0:
        raise SingularParameterError(f"Limit recurrence is singular at n = {n} for g = {format_rational(g)}", n=n)
    if n % 2 == 0:
        a_star = -(m + rho1 + rho2 + 1) * (m + g + 1) / den
        g_star = m * (m - r1 - r2) / den
    else:
        a_star = -(m + rho1 - r1 + 3 * HALF) * (m + rho1 - r2 + 3 * HALF) / den
        g_star = (m + rho2 - r1 + HALF) * (m + rho2 - r2 + HALF) / den
    return a_star, g_star


def monic_product_failures(params: ParamSet, n_max: int = 20) -> List[int]:
    """Degrees 1 <= n <= n_max where alpha*_{n-1} gamma*_n != tau_n."""
    failures = []
    for n in range(1, n_max + 1):
        if aw_limit_coeffs(params, n - 1)[0] * aw_limit_coeffs(params, n)[1] != cbi_tau(params, n):
            failures.append(n)
    return failures


def para_krawtchouk_check(N: int, gamma: Any) -> Dict[str, Any]:
    """Eigen equation, symmetry and truncation of the para-Krawtchouk specialization."""
    params, alpha = para_krawtchouk_params(N, gamma)
    eigen = verify_eigen(params, alpha, N)
    symmetric = all(recurrence_diagonal(params, n) == 0 for n in range(N + 1))
    num, _ = tau_parts(params.rho1, params.rho2, params.r1, params.r2, N + 1)
    truncated = num == 0
    return {
        "params": params.to_dict(),
        "alpha": format_rational(alpha),
        "N": N,
        "passed": eigen.passed and symmetric and truncated,
        "eigen": eigen.to_dict(),
        "symmetric": symmetric,
        "truncated": truncated,
        "polynomials": [cbi_polynomial(params, n).to_strings() for n in range(N + 1)],
    }
