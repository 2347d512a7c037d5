#!/usr/bin/env python
"""
The CBI algebra realized by reflection-shift operators.

Relations and the Casimir are written once against a minimal algebra
protocol (@ for products, + and -, left multiplication by scalars) and
evaluated on three carriers: normal-form operators, composed polynomial
actions, and exact or floating matrices.
"""
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List

from errors import CasimirFailure, VerificationFailure
from exact.rat_func import RatFunc
from exact.scalar import format_rational
from exact.uni_poly import UniPoly
from models.param_set import ParamSet
from models.reports import RelationCheck, RelationReport
from models.structure_constants import StructureConstants
from operators.dunkl import build_D_alpha, d0_coefficients
from operators.shift_reflect_op import ShiftReflectOp, anticommutator, commutator

ZERO = Fraction(0)
ONE = Fraction(1)

RELATION_NAMES = (
    "[K1,P] = 0",
    "{K2,P} = 2 d3",
    "{K3,P} = 0",
    "[K1,K2] = K3",
    "[K1,K3]",
    "[K3,K2]",
    "P^2 = I",
)


class ActionMap:
    """
    A linear map on polynomials given by a function.

    Products compose the functions, so relations evaluated on ActionMaps
    never touch the normal-form composition of ShiftReflectOp.
    """

    def __init__(self, fn: Callable[[UniPoly], UniPoly]) -> None:
        self.fn = fn

    @classmethod
    def of(cls, op: ShiftReflectOp) -> "ActionMap":
        return cls(op.apply)

    @classmethod
    def identity(cls) -> "ActionMap":
        return cls(lambda p: p)

    def __call__(self, p: UniPoly) -> UniPoly:
        return self.fn(p)

    def __matmul__(self, other: "ActionMap") -> "ActionMap":
        return ActionMap(lambda p: self.fn(other.fn(p)))

    def __add__(self, other: "ActionMap") -> "ActionMap":
        return ActionMap(lambda p: self.fn(p) + other.fn(p))

    def __sub__(self, other: "ActionMap") -> "ActionMap":
        return ActionMap(lambda p: self.fn(p) - other.fn(p))

    def __neg__(self) -> "ActionMap":
        return ActionMap(lambda p: -self.fn(p))

    def __rmul__(self, scalar: Any) -> "ActionMap":
        return ActionMap(lambda p: scalar * self.fn(p))


def build_K1(params: ParamSet, alpha: Any) -> ShiftReflectOp:
    return build_D_alpha(params, alpha)


def build_K2() -> ShiftReflectOp:
    return ShiftReflectOp.multiplication(UniPoly.x())


def build_P(params: ParamSet) -> ShiftReflectOp:
    """R + (rho2/x)(I - R)."""
    x = RatFunc.x()
    return ShiftReflectOp({
        (ZERO, False): params.rho2 / x,
        (ZERO, True): (x - params.rho2) / x,
    })


def build_K3(params: ParamSet, alpha: Any) -> ShiftReflectOp:
    x = RatFunc.x()
    c = d0_coefficients(x, params.rho1, params.rho2, params.r1, params.r2)
    return ShiftReflectOp({
        (ONE, False): c["A"],
        (-ONE, False): -c["B"],
        (ZERO, True): Fraction(alpha) * (x - params.rho2) - 2 * x * c["C"],
        (ONE, True): -(1 + 2 * x) * c["D"],
    })


def structure_constants(params: ParamSet, alpha: Any) -> StructureConstants:
    alpha = Fraction(alpha)
    rho1, rho2, r1, r2, g = params.rho1, params.rho2, params.r1, params.r2, params.g
    w = 4 * rho1 - 4 * (r1 + r2) * rho1 + 4 * r1 * r2 - 6 * (r1 + r2) + 5
    d1 = alpha * (g - alpha + 1)
    d2 = g - 2 * alpha + Fraction(3, 2)
    d3 = rho2
    d4 = (
        alpha * (2 * rho2 * rho2 - rho2 + Fraction(1, 2))
        + rho2 * w / 4
        + (8 * rho1 * r1 * r2 + 4 * r1 * r2 - 2 * rho1 + 2 * r1 + 2 * r2 - 3) / 8
    )
    d5 = alpha * (rho2 - Fraction(1, 2)) + w / 8
    return StructureConstants(d1, d2, d3, d4, d5)


def relation_residuals(k1: Any, k2: Any, k3: Any, p: Any, identity: Any, d: StructureConstants) -> Dict[str, Any]:
    """Left side minus right side of each defining relation."""
    half = type(d.d1)(1) / 2
    k2_squared = k2 @ k2
    return {
        "[K1,P] = 0": commutator(k1, p),
        "{K2,P} = 2 d3": anticommutator(k2, p) - (2 * d.d3) * identity,
        "{K3,P} = 0": anticommutator(k3, p),
        "[K1,K2] = K3": commutator(k1, k2) - k3,
        "[K1,K3]": commutator(k1, k3) - (
            half * anticommutator(k1, k2)
            - d.d2 * (k3 @ p)
            - d.d3 * (k1 @ p)
            + d.d1 * k2
            - (d.d1 * d.d3) * p
        ),
        "[K3,K2]": commutator(k3, k2) - (
            half * k2_squared
            + d.d2 * (k2_squared @ p)
            + (2 * d.d3) * (k1 @ p)
            + (2 * d.d3) * (k3 @ p)
            + k1
            + d.d4 * p
            + d.d5 * identity
        ),
        "P^2 = I": p @ p - identity,
    }


def casimir_element(k1: Any, k2: Any, k3: Any, p: Any, identity: Any, d: StructureConstants) -> Any:
    quarter = type(d.d1)(1) / 4
    half = type(d.d1)(1) / 2
    k2_squared = k2 @ k2
    return (
        half * anticommutator(k2_squared, k1)
        - (d.d2 * half) * (k2_squared @ p)
        + k1 @ k1
        - k3 @ k3
        + (d.d1 - quarter) * k2_squared
        + (d.d3 - d.d2) * (k1 @ p)
        + (2 * d.d5) * k1
        + (d.d1 * d.d3 - d.d2 * d.d5) * p
    )


def generators(params: ParamSet, alpha: Any) -> Dict[str, ShiftReflectOp]:
    return {
        "K1": build_K1(params, alpha),
        "K2": build_K2(),
        "K3": build_K3(params, alpha),
        "P": build_P(params),
        "I": ShiftReflectOp.identity(),
    }


def _action_failure(residual: ActionMap, max_degree: int) -> int:
    """Lowest monomial degree on which the residual acts nontrivially, or -1."""
    for m in range(max_degree + 1):
        if not residual(UniPoly.monomial(m)).is_zero():
            return m
    return -1


def verify_cbi_relations(params: ParamSet, alpha: Any, max_degree: int = 24) -> RelationReport:
    """
    Check every relation as a normal-form identity and by action on x^m, m <= max_degree.

    Raises:
        VerificationFailure: If any relation fails on monomials
    """
    alpha = Fraction(alpha)
    ops = generators(params, alpha)
    constants = structure_constants(params, alpha)
    normal = relation_residuals(ops["K1"], ops["K2"], ops["K3"], ops["P"], ops["I"], constants)
    actions = {name: ActionMap.of(op) for name, op in ops.items()}
    acted = relation_residuals(actions["K1"], actions["K2"], actions["K3"], actions["P"], ActionMap.identity(), constants)
    checks: List[RelationCheck] = []
    warnings: List[str] = []
    for name in RELATION_NAMES:
        degree = _action_failure(acted[name], max_degree)
        normal_ok = normal[name].is_zero()
        if degree >= 0:
            logging.error(f"Relation {name} fails on x^{degree} at {params}, alpha={alpha}")
            raise VerificationFailure(
                f"Relation {name} fails on x^{degree}",
                {"relation": name, "degree": degree, "params": params.to_dict(), "alpha": format_rational(alpha)},
            )
        if not normal_ok:
            warnings.append(f"{name}: holds on polynomials but not as a normal form")
            logging.warning(f"Relation {name} holds on polynomials only at {params}, alpha={alpha}")
        checks.append(RelationCheck(name, normal_ok, True))
    return RelationReport(params.to_dict(), alpha, constants.to_dict(), tuple(checks), tuple(warnings))


def casimir_operator(params: ParamSet, alpha: Any) -> ShiftReflectOp:
    ops = generators(params, alpha)
    return casimir_element(ops["K1"], ops["K2"], ops["K3"], ops["P"], ops["I"], structure_constants(params, alpha))


def casimir_scalar(params: ParamSet, alpha: Any) -> Fraction:
    """
    The scalar by which the Casimir acts.

    Raises:
        CasimirFailure: If the normal form is not q * I or Q fails to commute with a generator
    """
    ops = generators(params, alpha)
    q_op = casimir_element(ops["K1"], ops["K2"], ops["K3"], ops["P"], ops["I"], structure_constants(params, alpha))
    if not q_op.is_scalar():
        raise CasimirFailure("Casimir normal form is not a multiple of the identity", {"terms": q_op.to_json()})
    for name in ("K1", "K2", "K3", "P"):
        residual = commutator(q_op, ops[name])
        if not residual.is_zero():
            raise CasimirFailure(f"Casimir does not commute with {name}", {"generator": name, "terms": residual.to_json()})
    return q_op.scalar_value()


def tilde_constants_printed(constants: StructureConstants, beta: Fraction) -> StructureConstants:
    """Transformed constants in the closed form customarily stated for the alpha shift."""
    d1, d2, d3, d4, d5 = constants.d1, constants.d2, constants.d3, constants.d4, constants.d5
    half = Fraction(1, 2)
    return StructureConstants(
        d1 + beta * (d2 - half),
        d2 - 2 * beta,
        d3,
        d4 + beta * (2 * d3 * d3 - d3 + half),
        d5 + beta * (d3 - half),
    )


def alpha_shift_check(params: ParamSet, alpha: Any, beta: Any) -> Dict[str, Any]:
    """
    Covariance of the realization under alpha -> alpha + beta.

    K1~ = K1 + (beta/2)(I - P) and K3~ = K3 - beta P K2 + beta d3 must equal
    the generators at alpha + beta, and the relations must hold with the
    constants recomputed at alpha + beta. The stated d1~ omits a -beta^2
    term; both the stated and the corrected value are compared.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    ops = generators(params, alpha)
    constants = structure_constants(params, alpha)
    identity, p, k2 = ops["I"], ops["P"], ops["K2"]
    k1_tilde = ops["K1"] + (beta / 2) * (identity - p)
    k3_tilde = ops["K3"] - beta * (p @ k2) + (beta * constants.d3) * identity
    shifted = structure_constants(params, alpha + beta)
    printed = tilde_constants_printed(constants, beta)
    corrected_d1 = printed.d1 - beta * beta
    residuals = relation_residuals(k1_tilde, k2, k3_tilde, p, identity, shifted)
    constants_report = {}
    for name in ("d1", "d2", "d3", "d4", "d5"):
        value = getattr(shifted, name)
        stated = getattr(printed, name)
        constants_report[name] = {
            "value": format_rational(value),
            "stated": format_rational(stated),
            "stated_matches": value == stated,
        }
    constants_report["d1"]["corrected"] = format_rational(corrected_d1)
    constants_report["d1"]["corrected_matches"] = shifted.d1 == corrected_d1
    checks = {
        "K1~ = D_(alpha+beta)": k1_tilde == build_D_alpha(params, alpha + beta),
        "K3~ = [K1~,K2]": k3_tilde == commutator(k1_tilde, k2),
        "K3~ = K3 at alpha+beta": k3_tilde == build_K3(params, alpha + beta),
        "relations with shifted constants": all(r.is_zero() for r in residuals.values()),
        "d1~ corrected": shifted.d1 == corrected_d1,
        "d2~..d5~ stated": all(constants_report[n]["stated_matches"] for n in ("d2", "d3", "d4", "d5")),
    }
    return {
        "params": params.to_dict(),
        "alpha": format_rational(alpha),
        "beta": format_rational(beta),
        "passed": all(checks.values()),
        "checks": checks,
        "constants": constants_report,
    }
