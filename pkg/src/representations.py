#!/usr/bin/env python
"""
Finite matrix representations of the CBI algebra.

Three bases are covered: the monic polynomial basis (tridiagonal K2), its
orthonormal rescaling in double precision, and the dual basis of samples
on a spectral grid (diagonal K2, 2x2-block P, five-diagonal K1).
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from errors import GridPoleError, PoleError, PositivityError, VerificationFailure
from exact.scalar import format_rational
from models.exact_matrix import ExactMatrix
from models.param_set import ParamSet
from models.truncation_case import TruncationCase, TruncationTag
from cbi_family import cbi_polynomial, cbi_tau, recurrence_diagonal
from cbi_algebra import (
    RELATION_NAMES,
    build_K1,
    build_K2,
    build_P,
    casimir_element,
    casimir_scalar,
    relation_residuals,
    structure_constants,
)
from operators.dunkl import eigenvalue_lambda
from operators.grid import term_image
from operators.shift_reflect_op import ShiftReflectOp, commutator
from spectral_orthogonality import spectral_grid

RELATIVE_TOLERANCE = 1e-10
SPECTRUM_TOLERANCE = 1e-9


def monic_rep_matrices(params: ParamSet, alpha: Any, size: int) -> Dict[str, Any]:
    """
    Matrices of K1, K2, K3 and P in the basis I_0..I_{size-1}.

    Column n holds the image of I_n. The relations and the Casimir are
    checked on the leading (size-2) block, away from the truncation boundary.

    Raises:
        VerificationFailure: If a relation fails on the interior block
    """
    if size < 3:
        raise ValueError(f"Representation size must be at least 3, got {size}")
    alpha = Fraction(alpha)
    k1 = ExactMatrix.diagonal([eigenvalue_lambda(params, alpha, n) for n in range(size)])
    p = ExactMatrix.diagonal([1 if n % 2 == 0 else -1 for n in range(size)])
    rows = [[Fraction(0)] * size for _ in range(size)]
    for n in range(size):
        rows[n][n] = recurrence_diagonal(params, n)
        if n + 1 < size:
            rows[n + 1][n] = Fraction(1)
        if n > 0:
            rows[n - 1][n] = cbi_tau(params, n)
    k2 = ExactMatrix.from_rows(rows)
    k3 = commutator(k1, k2)
    identity = ExactMatrix.identity(size)
    constants = structure_constants(params, alpha)
    block = size - 2
    residuals = relation_residuals(k1, k2, k3, p, identity, constants)
    for name in RELATION_NAMES:
        if not residuals[name].leading_block(block).is_zero():
            raise VerificationFailure(
                f"Monic representation violates {name}",
                {"relation": name, "size": size, "params": params.to_dict(), "alpha": format_rational(alpha)},
            )
    casimir = casimir_element(k1, k2, k3, p, identity, constants).leading_block(block)
    q = casimir_scalar(params, alpha)
    if casimir != q * ExactMatrix.identity(block):
        raise VerificationFailure(
            "Monic representation of the Casimir is not the operator scalar",
            {"size": size, "params": params.to_dict(), "alpha": format_rational(alpha), "q": format_rational(q)},
        )
    return {"K1": k1, "K2": k2, "K3": k3, "P": p, "casimir": q}


def orthonormal_rep_check(params: ParamSet, alpha: Any, size: int, spectrum: List[Fraction] = None) -> Dict[str, Any]:
    """
    Double-precision orthonormal representation with symmetric tridiagonal K2.

    a_n = sqrt(tau_n) with a_0 = 0 and b_n = (-1)^n rho2. The relations are
    checked on the interior block to a relative tolerance, the similarity
    with the monic matrices through diag(prod sqrt(tau)) is checked, and when
    a spectrum is given the eigenvalues of K2 are compared with it.

    Raises:
        PositivityError: If some tau_n <= 0 for 1 <= n < size
    """
    alpha = Fraction(alpha)
    taus = [cbi_tau(params, n) for n in range(1, size)]
    if any(t <= 0 for t in taus):
        n = next(i + 1 for i, t in enumerate(taus) if t <= 0)
        raise PositivityError(f"tau_{n} = {format_rational(taus[n - 1])} is not positive at {params}")
    a = np.concatenate([[0.0], np.sqrt(np.array([float(t) for t in taus]))])
    b = np.array([float(recurrence_diagonal(params, n)) for n in range(size)])
    k2 = np.diag(b) + np.diag(a[1:], 1) + np.diag(a[1:], -1)
    k1 = np.diag([float(eigenvalue_lambda(params, alpha, n)) for n in range(size)])
    p = np.diag([1.0 if n % 2 == 0 else -1.0 for n in range(size)])
    k3 = k1 @ k2 - k2 @ k1
    constants = structure_constants(params, alpha).as_floats()
    block = size - 2
    scale = max(1.0, np.max(np.abs(k1)), np.max(np.abs(k2)) ** 2)
    residuals = relation_residuals(k1, k2, k3, p, np.eye(size), constants)
    relation_errors = {
        name: float(np.max(np.abs(residuals[name][:block, :block]))) / scale for name in RELATION_NAMES
    }
    monic = monic_rep_matrices(params, alpha, size)["K2"].to_float()
    d = np.cumprod(a[1:]).astype(float)
    d = np.concatenate([[1.0], d])
    similar = np.diag(d) @ monic @ np.diag(1.0 / d)
    similarity_error = float(np.max(np.abs(similar - k2))) / max(1.0, float(np.max(np.abs(k2))))
    report: Dict[str, Any] = {
        "params": params.to_dict(),
        "alpha": format_rational(alpha),
        "size": size,
        "a": a.tolist(),
        "b": b.tolist(),
        "relation_errors": relation_errors,
        "similarity_error": similarity_error,
    }
    passed = max(relation_errors.values()) < RELATIVE_TOLERANCE and similarity_error < RELATIVE_TOLERANCE
    if spectrum is not None:
        eigenvalues = eigh_tridiagonal(b, a[1:], eigvals_only=True)
        target = np.sort(np.array([float(x) for x in spectrum]))
        spectrum_error = float(np.max(np.abs(np.sort(eigenvalues) - target)))
        report["spectrum_error"] = spectrum_error
        passed = passed and spectrum_error < SPECTRUM_TOLERANCE
    report["passed"] = bool(passed)
    logging.info(f"Orthonormal representation of size {size} at {params}: passed={report['passed']}")
    return report


def sample_matrix(op: ShiftReflectOp, grid: List[Fraction]) -> ExactMatrix:
    """
    Matrix of an operator acting on sample vectors (f(x_0), ..., f(x_N)).

    Raises:
        GridPoleError: If a coefficient is singular at a grid point
        VerificationFailure: If a nonzero coefficient maps a grid point off the grid
    """
    size = len(grid)
    index = {x: k for k, x in enumerate(grid)}
    rows = [[Fraction(0)] * size for _ in range(size)]
    for k, x in enumerate(grid):
        for key, value in op.terms.items():
            try:
                c = value(x)
            except PoleError:
                raise GridPoleError(f"Coefficient pole at grid point x_{k} = {format_rational(x)}", k=k)
            if c == 0:
                continue
            image = term_image(key, x)
            if image not in index:
                raise VerificationFailure(
                    "Operator leaves the spectral grid",
                    {"k": k, "x": format_rational(x), "image": format_rational(image)},
                )
            rows[k][index[image]] += c
    return ExactMatrix.from_rows(rows)


def _pairs(size: int, even_grid: bool) -> List[Tuple[int, ...]]:
    start = [(0,)] if even_grid else []
    first = 1 if even_grid else 0
    blocks = start + [tuple(j for j in (i, i + 1) if j < size) for i in range(first, size, 2)]
    return blocks


def _block_diagonal(matrix: ExactMatrix, blocks: List[Tuple[int, ...]]) -> bool:
    owner = {j: b for b, block in enumerate(blocks) for j in block}
    for i in range(matrix.size):
        for j in range(matrix.size):
            if matrix[i, j] != 0 and owner[i] != owner[j]:
                return False
    return True


def _expected_p_diagonal(case: TruncationCase, params: ParamSet, k: int) -> Fraction:
    rho2 = params.rho2
    if case.tag.is_even:
        t = rho2
        half, parity = divmod(k, 2)
        return rho2 / (half + t) if parity == 0 else -rho2 / (half + t + 1)
    h = params.r2 if case.tag is TruncationTag.ODD_III else params.r1
    t = Fraction(1, 2) - h
    half, parity = divmod(k, 2)
    return -rho2 / (half + t) if parity == 0 else rho2 / (half + t)


def dual_basis_structure(case: TruncationCase, params: ParamSet, alpha: Any) -> Dict[str, Any]:
    """
    Sample-matrix representation on the spectral grid of a truncation case.

    Asserts: P is block diagonal with 2x2 blocks, its diagonal follows
    +-rho2/(k+t), K1 has bandwidth <= 2, K2 is the diagonal of grid values,
    the sampled polynomials are eigenvectors of K1, every relation holds as
    an exact matrix identity and the Casimir is the operator scalar.

    Raises:
        VerificationFailure: On the first violated claim
    """
    alpha = Fraction(alpha)
    grid = spectral_grid(case, params)
    size = len(grid)
    k1 = sample_matrix(build_K1(params, alpha), grid)
    k2 = sample_matrix(build_K2(), grid)
    p = sample_matrix(build_P(params), grid)
    k3 = commutator(k1, k2)
    identity = ExactMatrix.identity(size)
    witness = {"case": case.to_dict(), "params": params.to_dict(), "alpha": format_rational(alpha)}

    blocks = _pairs(size, case.tag.is_even)
    if not _block_diagonal(p, blocks):
        raise VerificationFailure("P is not block diagonal in the grid pairing", witness)
    for k, x in enumerate(grid):
        if x == 0:
            continue
        if p[k, k] != _expected_p_diagonal(case, params, k):
            raise VerificationFailure(f"P diagonal entry {k} does not follow rho2/(k+t)", {**witness, "k": k})
    if k1.bandwidth() > 2:
        raise VerificationFailure("K1 is not five-diagonal on the grid", {**witness, "bandwidth": k1.bandwidth()})
    if k2 != ExactMatrix.diagonal(grid):
        raise VerificationFailure("K2 is not the diagonal of grid values", witness)
    for n in range(size):
        vector = np.array([cbi_polynomial(params, n)(x) for x in grid], dtype=object)
        if np.any(k1.entries.dot(vector) != eigenvalue_lambda(params, alpha, n) * vector):
            raise VerificationFailure(f"Sampled I_{n} is not an eigenvector of K1", {**witness, "n": n})
    constants = structure_constants(params, alpha)
    residuals = relation_residuals(k1, k2, k3, p, identity, constants)
    for name in RELATION_NAMES:
        if not residuals[name].is_zero():
            raise VerificationFailure(f"Sample matrices violate {name}", {**witness, "relation": name})
    q = casimir_scalar(params, alpha)
    if casimir_element(k1, k2, k3, p, identity, constants) != q * identity:
        raise VerificationFailure("Sampled Casimir differs from the operator scalar", witness)
    return {
        **witness,
        "passed": True,
        "grid": [format_rational(x) for x in grid],
        "p_blocks": [list(b) for b in blocks],
        "k1_bandwidth": k1.bandwidth(),
        "p_diagonal": [format_rational(p[k, k]) for k in range(size)],
        "casimir": format_rational(q),
    }
