#!/usr/bin/env python
from .param_set import AWParams, DualHahnParams, ParamSet
from .poly_table import PolyTable
from .truncation_case import BiTruncationCase, BiTruncationTag, TruncationCase, TruncationTag
from .structure_constants import StructureConstants
from .exact_matrix import ExactMatrix
from .reports import (
    EigenFailure,
    EigenReport,
    LimitRow,
    NumericLimitReport,
    OrthoReport,
    RelationCheck,
    RelationReport,
    SuiteReport,
)
from .run_config import RunConfig

__all__ = [
    "AWParams",
    "BiTruncationCase",
    "BiTruncationTag",
    "DualHahnParams",
    "EigenFailure",
    "EigenReport",
    "ExactMatrix",
    "LimitRow",
    "NumericLimitReport",
    "OrthoReport",
    "ParamSet",
    "PolyTable",
    "RelationCheck",
    "RelationReport",
    "RunConfig",
    "StructureConstants",
    "SuiteReport",
    "TruncationCase",
    "TruncationTag",
]
