#!/usr/bin/env python
from .shift_reflect_op import ShiftReflectOp, anticommutator, commutator, op_apply, op_compose, op_equal
from .dunkl import (
    build_D0,
    build_D_alpha,
    build_H_y,
    build_U,
    conjugated_H,
    eigenvalue_kappa,
    eigenvalue_lambda,
    hidden_alpha,
)
from .grid import alternate_grid, bi_grid, five_term_apply

__all__ = [
    "ShiftReflectOp",
    "alternate_grid",
    "anticommutator",
    "bi_grid",
    "build_D0",
    "build_D_alpha",
    "build_H_y",
    "build_U",
    "commutator",
    "conjugated_H",
    "eigenvalue_kappa",
    "eigenvalue_lambda",
    "five_term_apply",
    "hidden_alpha",
    "op_apply",
    "op_compose",
    "op_equal",
]
