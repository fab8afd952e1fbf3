"""Finite k x k truncation of the correction equation."""

from qtsqrt.truncated.dense_solvers import finite_residual, solve_finite_fpi, solve_finite_sda
from qtsqrt.truncated.equation import build_finite_equation, choose_k, suggest_k, w_matrix
from qtsqrt.truncated.extension import extend_to_infinity, extension_error_bound, verify_extension

__all__ = [
    "build_finite_equation",
    "choose_k",
    "extend_to_infinity",
    "extension_error_bound",
    "finite_residual",
    "solve_finite_fpi",
    "solve_finite_sda",
    "suggest_k",
    "verify_extension",
    "w_matrix",
]
