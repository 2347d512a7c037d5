#!/usr/bin/env python
from .scalar import HALF, QUARTER, format_rational, is_integer, parse_rational, pochhammer, to_scalar
from .uni_poly import UniPoly, poly_affine_substitute
from .rat_func import RatFunc, common_denominator, ratfunc_apply
from .hypergeometric import limit_at_infinity, pfq_terminating

__all__ = [
    "HALF",
    "QUARTER",
    "RatFunc",
    "UniPoly",
    "common_denominator",
    "format_rational",
    "is_integer",
    "limit_at_infinity",
    "parse_rational",
    "pfq_terminating",
    "pochhammer",
    "poly_affine_substitute",
    "ratfunc_apply",
    "to_scalar",
]
