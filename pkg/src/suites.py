#!/usr/bin/env python
"""
Verification suites run by the `verify` command.

A suite expands its configuration into independent work items. The items
are fanned out with joblib and their checks are appended to the SuiteReport
in submission order, so the report does not depend on the worker count.
"""
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Sequence, Tuple

from joblib import Parallel, delayed

from errors import ConfigError, VerificationFailure
from exact.scalar import format_rational
from models.param_set import AWParams, DualHahnParams, ParamSet
from models.reports import SuiteReport
from models.run_config import RunConfig
from models.truncation_case import BiTruncationTag, TruncationTag
from askey_wilson import aw_normalized, aw_polynomial, aw_recurrence_coeffs, aw_recurrence_residuals, random_points, verify_aw_limit
from cbi_algebra import alpha_shift_check, casimir_scalar, verify_cbi_relations
from cbi_family import cbi_closed_form, cbi_polynomial, cbi_table, cbi_tau, kernel_round_trip, parity_residual
from limits_bridge import (
    alternate_symmetric_hahn,
    dual_hahn_algebra_check,
    dual_hahn_recurrence_residual,
    dual_m1_hahn_poly,
    dual_m1_hahn_recurrence_poly,
    monic_product_failures,
    para_krawtchouk_check,
    para_krawtchouk_params,
    symmetric_hahn_reduction,
    verify_dual_hahn_eigen,
    verify_dual_hahn_limit,
)
from operators.dunkl import verify_eigen, verify_hidden, verify_hidden_identity, verify_kappa
from operators.grid import five_term_apply
from param_sampler import random_alphas, random_draws, random_dual_hahn_params, random_param_sets
from representations import dual_basis_structure, monic_rep_matrices, orthonormal_rep_check
from spectral_orthogonality import (
    bi_truncated_params,
    classify_bi_truncation,
    classify_truncation,
    even_positive_tau,
    odd_positive_tau,
    positive_even_params,
    positive_odd_params,
    spectral_grid,
    truncated_params,
    verify_bi_orthogonality,
    verify_orthogonality,
)

Check = Dict[str, Any]
WorkItem = Tuple[Callable[..., List[Check]], Tuple[Any, ...]]

SUITES = (
    "eigen",
    "five-term",
    "ortho",
    "bi-ortho",
    "algebra",
    "dual-hahn",
    "hahn",
    "para-krawtchouk",
    "aw-limit",
    "aw-poly",
    "closed-form",
    "kernel",
    "hidden",
    "dual-basis",
    "representations",
)

REFERENCE_PARAMS = ParamSet(1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))
POSITIVE_TRIPLES = (
    (Fraction(1), Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(1, 2), Fraction(3)),
    (Fraction(1, 3), Fraction(2), Fraction(1)),
)
EVEN_SIZES = (2, 4, 6)
ODD_SIZES = (3, 5)
K_RANGE = range(-8, 9)
FIVE_TERM_MAX_N = 12
CLOSED_FORM_MAX_N = 10
KERNEL_MAX_N = 12
DUAL_HAHN_EIGEN_MAX_N = 20
MONIC_PRODUCT_MAX_N = 20
REPRESENTATION_SIZE = 16
AW_TEST_PARAMS = AWParams(0.5, 0.3, 0.2, -0.1, 0.9)
AW_TEST_POINT = 1.3 + 0.2j
AW_MAX_N = 6
AW_TOLERANCE = 1e-9


def _check(name: str, identity: str, passed: bool, **details: Any) -> Check:
    return {"name": name, "identity": identity, "passed": bool(passed), **details}


def _report_check(name: str, identity: str, data: Dict[str, Any]) -> Check:
    details = {k: v for k, v in data.items() if k not in ("identity", "passed")}
    return _check(name, identity, data["passed"], **details)


def _guarded(name: str, identity: str, build: Callable[[], Check]) -> Check:
    """Run one check, turning a VerificationFailure into a failed entry with its witness."""
    try:
        return build()
    except VerificationFailure as e:
        logging.error(f"{name} failed: {e} witness={e.witness}")
        return _check(name, identity, False, error=str(e), witness=e.witness)


def _eigen_item(index: int, params: ParamSet, alpha: Fraction, n_max: int) -> List[Check]:
    eigen = verify_eigen(params, alpha, n_max).to_dict()
    hidden = verify_hidden(params, n_max).to_dict()
    return [
        _report_check(f"eigen #{index}", "D_alpha I_n = Lambda_n I_n", eigen),
        _report_check(f"hidden #{index}", "U I_n = (n mod 2) I_n", hidden),
    ]


def _five_term_item(index: int, params: ParamSet, alpha: Fraction, grids: Sequence[Tuple[str, Fraction]]) -> List[Check]:
    table = cbi_table(params, FIVE_TERM_MAX_N)
    checks = []
    for grid, h in grids:
        report = five_term_apply(params, alpha, table, h, K_RANGE, grid).to_dict()
        report["h"] = format_rational(h)
        checks.append(_report_check(f"five-term #{index} {grid}", "five-term difference equation", report))
    return checks


def _ortho_item(label: str, params: ParamSet, N: int, tau_closed_form: Callable[[int], Fraction] = None) -> List[Check]:
    identity = "discrete orthogonality on the spectral grid"

    def build() -> Check:
        case = classify_truncation(params, N)
        data = verify_orthogonality(case, params).to_dict()
        if tau_closed_form is not None:
            data["tau_closed_form"] = all(tau_closed_form(n) == cbi_tau(params, n) for n in range(1, N + 1))
            data["passed"] = data["passed"] and data["tau_closed_form"]
        return _report_check(label, identity, data)

    return [_guarded(label, identity, build)]


def _bi_ortho_item(tag: BiTruncationTag, N: int, seed: int) -> List[Check]:
    label = f"{tag.value} N={N}"
    identity = "Bannai-Ito orthogonality on the truncated grid"

    def build() -> Check:
        params = bi_truncated_params(tag, N, seed)
        case = classify_bi_truncation(params, N)
        return _report_check(label, identity, verify_bi_orthogonality(case, params).to_dict())

    return [_guarded(label, identity, build)]


def _algebra_item(index: int, params: ParamSet, alpha: Fraction, beta: Fraction) -> List[Check]:
    witness = {"params": params.to_dict(), "alpha": format_rational(alpha)}
    relations = _guarded(
        f"relations #{index}",
        "CBI algebra relations",
        lambda: _report_check(f"relations #{index}", "CBI algebra relations", verify_cbi_relations(params, alpha).to_dict()),
    )
    casimir = _guarded(
        f"casimir #{index}",
        "Casimir is central and scalar",
        lambda: _check(f"casimir #{index}", "Casimir is central and scalar", True, q=format_rational(casimir_scalar(params, alpha)), **witness),
    )
    shift = _report_check(f"alpha shift #{index}", "covariance under alpha -> alpha + beta", alpha_shift_check(params, alpha, beta))
    return [relations, casimir, shift]


def _dual_hahn_item(index: int, p: DualHahnParams, alpha: Fraction) -> List[Check]:
    witness = {"params": p.to_dict(), "alpha": format_rational(alpha)}
    limit = _guarded(
        f"rho1 limit #{index}",
        "rho1 -> infinity limit to the dual -1 Hahn family",
        lambda: _report_check(f"rho1 limit #{index}", "rho1 -> infinity limit to the dual -1 Hahn family", verify_dual_hahn_limit(p, alpha)),
    )
    eigen_failures = verify_dual_hahn_eigen(p, alpha, DUAL_HAHN_EIGEN_MAX_N)
    eigen = _check(f"E_alpha eigen #{index}", "E_alpha Q_n = nu_n Q_n", not eigen_failures, failures=eigen_failures, **witness)
    mismatches = [
        n for n in range(CLOSED_FORM_MAX_N + 1)
        if dual_m1_hahn_poly(p, n) != dual_m1_hahn_recurrence_poly(p, n) or not dual_hahn_recurrence_residual(p, n).is_zero()
    ]
    closed = _check(f"3F2 form #{index}", "dual -1 Hahn 3F2 form satisfies the recurrence", not mismatches, failures=mismatches, **witness)
    algebra = _guarded(
        f"reduced algebra #{index}",
        "dual -1 Hahn algebra relations",
        lambda: _report_check(f"reduced algebra #{index}", "dual -1 Hahn algebra relations", dual_hahn_algebra_check(p, alpha)),
    )
    return [limit, eigen, closed, algebra]


def _hahn_item(index: int, r1: Fraction, r2: Fraction, sizes: Sequence[int]) -> List[Check]:
    identity = "symmetric Hahn specialization"
    checks = [_guarded(f"symmetric Hahn #{index}", identity, lambda: _report_check(f"symmetric Hahn #{index}", identity, symmetric_hahn_reduction(r1, r2)))]
    for N in sizes:
        label = f"symmetric Hahn #{index} N={N}"
        checks.append(_guarded(label, identity, lambda N=N, label=label: _report_check(label, identity, symmetric_hahn_reduction(r1, r2, N))))
    for vanishing, r in (("r1", r2), ("r2", r1)):
        label = f"alternate Hahn #{index} {vanishing}=0"
        checks.append(_guarded(
            label,
            "alternate three-term reduction",
            lambda vanishing=vanishing, r=r, label=label: _report_check(
                label, "alternate three-term reduction", alternate_symmetric_hahn(r1 + r2, r, vanishing)
            ),
        ))
    return checks


def _para_krawtchouk_item(N: int, gamma: Fraction) -> List[Check]:
    label = f"para-Krawtchouk N={N}"
    check = _report_check(label, "para-Krawtchouk specialization", para_krawtchouk_check(N, gamma))
    params, _ = para_krawtchouk_params(N, gamma)
    return [check] + _ortho_item(f"{label} orthogonality", params, N)


def _aw_limit_item(params: ParamSet, eps: Sequence[float]) -> List[Check]:
    report = verify_aw_limit(params, AW_MAX_N, eps).to_dict()
    return [_report_check("Askey-Wilson limit", "q -> -1 limit of the Askey-Wilson recurrence", report)]


def _monic_product_item(index: int, params: ParamSet) -> List[Check]:
    failures = monic_product_failures(params, MONIC_PRODUCT_MAX_N)
    return [_check(f"monic product #{index}", "alpha*_(n-1) gamma*_n = tau_n", not failures, params=params.to_dict(), failures=failures)]


def _aw_poly_item(seed: int) -> List[Check]:
    p = AW_TEST_PARAMS
    residuals = aw_recurrence_residuals(p, AW_TEST_POINT, AW_MAX_N)
    checks = [_check(
        "recurrence residuals",
        "Askey-Wilson recurrence",
        max(residuals) < AW_TOLERANCE,
        residuals=residuals,
    )]
    first_step = []
    for z in random_points(seed, 10):
        alpha0, _ = aw_recurrence_coeffs(p, 0)
        lhs = alpha0 * (aw_normalized(p, z, 1) - 1)
        rhs = z + 1 / z - p.a - 1 / p.a
        first_step.append(float(abs(lhs - rhs) / max(1.0, abs(rhs))))
    checks.append(_check("first step", "alpha_0 (p_1 - 1) = z + 1/z - a - 1/a", max(first_step) < 1e-10, residuals=first_step))
    checks.append(_check("degree zero", "p_0 = 1", aw_polynomial(p, AW_TEST_POINT, 0) == 1))
    return checks


def _closed_form_item(index: int, params: ParamSet, n_max: int) -> List[Check]:
    mismatches = [n for n in range(min(n_max, CLOSED_FORM_MAX_N) + 1) if cbi_closed_form(params, n) != cbi_polynomial(params, n)]
    parity = [n for n in range(n_max + 1) if not parity_residual(params, n).is_zero()]
    return [
        _check(f"closed form #{index}", "4F3 closed form equals the recurrence", not mismatches, params=params.to_dict(), failures=mismatches),
        _check(f"parity #{index}", "parity relation of I_n", not parity, params=params.to_dict(), failures=parity),
    ]


def _kernel_item(index: int, params: ParamSet, n_max: int) -> List[Check]:
    failures = list(kernel_round_trip(params, min(n_max, KERNEL_MAX_N)))
    return [_check(f"kernel #{index}", "Christoffel and Geronimus round trip", not failures, params=params.to_dict(), failures=failures)]


def _hidden_item(index: int, params: ParamSet, n_max: int) -> List[Check]:
    kappa = verify_kappa(params, n_max).to_dict()
    return [
        _report_check(f"kappa #{index}", "H I_n(y-1/4) = kappa_n I_n(y-1/4)", kappa),
        _check(f"conjugation #{index}", "T^(1/4) H T^(-1/4) = D_(g^2+2g+5/4)", verify_hidden_identity(params), params=params.to_dict()),
    ]


def _dual_basis_item(label: str, params: ParamSet, N: int, alpha: Fraction) -> List[Check]:
    identity = "sample-matrix representation on the spectral grid"
    return [_guarded(label, identity, lambda: _report_check(label, identity, dual_basis_structure(classify_truncation(params, N), params, alpha)))]


def _monic_rep_item(index: int, params: ParamSet, alpha: Fraction) -> List[Check]:
    identity = "monic matrix representation"

    def build() -> Check:
        matrices = monic_rep_matrices(params, alpha, REPRESENTATION_SIZE)
        return _check(f"monic #{index}", identity, True, params=params.to_dict(), alpha=format_rational(alpha), casimir=format_rational(matrices["casimir"]))

    return [_guarded(f"monic #{index}", identity, build)]


def _orthonormal_item(label: str, params: ParamSet, N: int, alpha: Fraction) -> List[Check]:
    spectrum = spectral_grid(classify_truncation(params, N), params)
    report = orthonormal_rep_check(params, alpha, N + 1, spectrum)
    return [_report_check(label, "orthonormal representation and spectrum", report)]


class SuiteRunner:
    """
    Expands a RunConfig into work items and reduces their checks into a SuiteReport.
    """
    def __init__(self, config: RunConfig) -> None:
        if config.suite not in SUITES:
            raise ConfigError(f"Unknown suite {config.suite!r}; expected one of {', '.join(SUITES)}")
        self.config = config
        self._planners: Dict[str, Callable[[], List[WorkItem]]] = {
            "eigen": self._plan_eigen,
            "five-term": self._plan_five_term,
            "ortho": self._plan_ortho,
            "bi-ortho": self._plan_bi_ortho,
            "algebra": self._plan_algebra,
            "dual-hahn": self._plan_dual_hahn,
            "hahn": self._plan_hahn,
            "para-krawtchouk": self._plan_para_krawtchouk,
            "aw-limit": self._plan_aw_limit,
            "aw-poly": self._plan_aw_poly,
            "closed-form": self._plan_closed_form,
            "kernel": self._plan_kernel,
            "hidden": self._plan_hidden,
            "dual-basis": self._plan_dual_basis,
            "representations": self._plan_representations,
        }

    def run(self) -> SuiteReport:
        suite = self.config.suite
        report = SuiteReport(suite, self.config.to_dict())
        work = self._planners[suite]()
        logging.info(f"Suite {suite}: {len(work)} work items on {self.config.workers} worker(s)")
        results = Parallel(n_jobs=self.config.workers)(delayed(worker)(*args) for worker, args in work)
        for checks in results:
            for check in checks:
                report.add(**check)
        logging.info(f"Suite {suite} finished: {len(report.checks)} checks, {len(report.failures)} failures")
        return report

    def _draws(self, alphas_per_set: int = 1) -> List[Tuple[ParamSet, Fraction]]:
        if self.config.params is not None:
            return [(self.config.params, self.config.alpha)]
        return random_draws(self.config.seed, self.config.draws, alphas_per_set)

    def _param_sets(self) -> List[ParamSet]:
        if self.config.params is not None:
            return [self.config.params]
        return random_param_sets(self.config.seed, self.config.draws)

    def _even_items(self) -> List[Tuple[Tuple[Fraction, ...], int]]:
        triples = [self.config.even_triple] if self.config.even_triple else list(POSITIVE_TRIPLES)
        sizes = [self.config.truncation_n] if self.config.truncation_n else list(EVEN_SIZES)
        return [(t, N) for t in triples for N in sizes]

    def _odd_items(self) -> List[Tuple[Tuple[Fraction, ...], int]]:
        triples = [self.config.odd_triple] if self.config.odd_triple else list(POSITIVE_TRIPLES)
        sizes = [self.config.truncation_n] if self.config.truncation_n else list(ODD_SIZES)
        return [(t, N) for t in triples for N in sizes]

    def _positive_cases(self) -> List[Tuple[str, ParamSet, int, Callable[[int], Fraction]]]:
        cases = []
        if self.config.odd_triple is None:
            for (a, b, c), N in self._even_items():
                label = f"even ({format_rational(a)}, {format_rational(b)}, {format_rational(c)}) N={N}"
                cases.append((label, positive_even_params(a, b, c, N), N, _TauClosedForm(even_positive_tau, (a, b, c), N)))
        if self.config.even_triple is None:
            for (z, x, c), N in self._odd_items():
                label = f"odd ({format_rational(z)}, {format_rational(x)}, {format_rational(c)}) N={N}"
                cases.append((label, positive_odd_params(z, x, c, N), N, _TauClosedForm(odd_positive_tau, (z, x, c), N)))
        return cases

    def _plan_eigen(self) -> List[WorkItem]:
        return [(_eigen_item, (i, p, a, self.config.n_max)) for i, (p, a) in enumerate(self._draws(alphas_per_set=3))]

    def _plan_five_term(self) -> List[WorkItem]:
        work = []
        for i, (p, a) in enumerate(self._draws()):
            h = self.config.grid_h
            grids = (("standard", p.rho2 if h is None else h), ("alternate", p.r1 if h is None else h))
            work.append((_five_term_item, (i, p, a, grids)))
        return work

    def _plan_ortho(self) -> List[WorkItem]:
        if self.config.params is not None and self.config.truncation_n:
            return [(_ortho_item, ("given parameters", self.config.params, self.config.truncation_n))]
        work: List[WorkItem] = [(_ortho_item, case) for case in self._positive_cases()]
        if self.config.even_triple is None and self.config.odd_triple is None:
            for i, tag in enumerate(TruncationTag):
                N = 4 if tag.is_even else 5
                params = truncated_params(tag, N, self.config.seed + i)
                work.append((_ortho_item, (f"{tag.value} N={N}", params, N)))
        return work

    def _plan_bi_ortho(self) -> List[WorkItem]:
        return [
            (_bi_ortho_item, (tag, 4 if tag.is_even else 3, self.config.seed + i))
            for i, tag in enumerate(BiTruncationTag)
        ]

    def _plan_algebra(self) -> List[WorkItem]:
        draws = self._draws()
        if self.config.params is not None:
            betas = [self.config.beta]
        else:
            betas = random_alphas(self.config.seed + len(draws), len(draws))
        return [(_algebra_item, (i, p, a, b)) for i, ((p, a), b) in enumerate(zip(draws, betas))]

    def _plan_dual_hahn(self) -> List[WorkItem]:
        params = random_dual_hahn_params(self.config.seed, self.config.draws)
        alphas = random_alphas(self.config.seed, self.config.draws)
        return [(_dual_hahn_item, (i, p, a)) for i, (p, a) in enumerate(zip(params, alphas))]

    def _plan_hahn(self) -> List[WorkItem]:
        sizes = [self.config.truncation_n] if self.config.truncation_n else [4, 5]
        draws = random_dual_hahn_params(self.config.seed, self.config.draws)
        return [(_hahn_item, (i, p.r1, p.r2, sizes)) for i, p in enumerate(draws)]

    def _plan_para_krawtchouk(self) -> List[WorkItem]:
        sizes = [self.config.truncation_n] if self.config.truncation_n else list(ODD_SIZES)
        return [(_para_krawtchouk_item, (N, self.config.gamma)) for N in sizes]

    def _plan_aw_limit(self) -> List[WorkItem]:
        params = self.config.params or REFERENCE_PARAMS
        work: List[WorkItem] = [(_aw_limit_item, (params, self.config.eps))]
        exact = [params] + random_param_sets(self.config.seed, self.config.draws)
        work.extend((_monic_product_item, (i, p)) for i, p in enumerate(exact))
        return work

    def _plan_aw_poly(self) -> List[WorkItem]:
        return [(_aw_poly_item, (self.config.seed,))]

    def _plan_closed_form(self) -> List[WorkItem]:
        return [(_closed_form_item, (i, p, self.config.n_max)) for i, p in enumerate(self._param_sets())]

    def _plan_kernel(self) -> List[WorkItem]:
        return [(_kernel_item, (i, p, self.config.n_max)) for i, p in enumerate(self._param_sets())]

    def _plan_hidden(self) -> List[WorkItem]:
        n_max = min(self.config.n_max, KERNEL_MAX_N)
        return [(_hidden_item, (i, p, n_max)) for i, p in enumerate(self._param_sets())]

    def _plan_dual_basis(self) -> List[WorkItem]:
        return [
            (_dual_basis_item, (label, params, N, self.config.alpha))
            for label, params, N, _ in self._positive_cases()
        ]

    def _plan_representations(self) -> List[WorkItem]:
        work: List[WorkItem] = [(_monic_rep_item, (i, p, a)) for i, (p, a) in enumerate(self._draws())]
        work.extend(
            (_orthonormal_item, (label, params, N, self.config.alpha))
            for label, params, N, _ in self._positive_cases()
        )
        return work


class _TauClosedForm:
    """Picklable closure n -> tau_n for a positivity parametrization."""

    def __init__(self, formula: Callable[..., Fraction], triple: Tuple[Fraction, ...], N: int) -> None:
        self.formula = formula
        self.triple = triple
        self.N = N

    def __call__(self, n: int) -> Fraction:
        return self.formula(*self.triple, self.N, n)
