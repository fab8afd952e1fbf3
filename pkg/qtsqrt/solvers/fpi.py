"""Fixed-point iteration for the correction part of the square root.

With B = T(b) + X the root satisfies (I - B)^2 = I - A1, and the correction
solves (2I - T(b) - X) X = Q + X T(b), Q = A1 + T(b)^2 - 2 T(b).
"""

from __future__ import annotations

import logging
import time
from typing import Callable

from qtsqrt.exceptions import BreakdownError
from qtsqrt.models.qt import QtMatrix
from qtsqrt.models.results import SolveMethod, SolveReport
from qtsqrt.qtcore import (
    qt_identity,
    qt_min_entry,
    qt_neumann_inverse_shifted,
    qt_norm_inf,
    qt_zero,
)
from qtsqrt.solvers.residual import check_budget, make_report, residual

log = logging.getLogger(__name__)

NORM_SLACK = 1e-8
NEGATIVITY_TOL = 1e-12


def check_iterate(C: QtMatrix, k: int) -> float:
    """Monitor T(b) + X_k >= 0 and ||T(b) + X_k|| < 1; returns the norm."""
    norm = qt_norm_inf(C)
    if norm >= 1.0 + NORM_SLACK:
        raise BreakdownError(f"||T(b) + X_{k}|| = {norm:.12g} is not below 1", norm=norm)
    smallest = qt_min_entry(C)
    if smallest < -max(C.threshold, NEGATIVITY_TOL):
        log.warning("T(b) + X_%d has a negative entry %.3e", k, smallest)
    return norm


def fpi_correction(
    A1: QtMatrix,
    Tb: QtMatrix,
    tol: float = 1e-13,
    max_iter: int = 500,
    neumann_max_terms: int = 4096,
    rank_tol: float = 1e-12,
    callback: Callable[[int, QtMatrix], None] | None = None,
) -> tuple[QtMatrix, SolveReport]:
    """X_{k+1} = (2I - T(b) - X_k)^{-1} (Q + X_k T(b)) from X_0 = 0.

    callback, when given, sees every iterate (k, X_k) including X_0.
    """
    started = time.perf_counter()
    threshold = max(A1.threshold, Tb.threshold)
    A = qt_identity(threshold) - A1
    Q = A1 + Tb @ Tb - 2.0 * Tb
    X = qt_zero(threshold)
    inner_tol = tol / 100

    history = [residual(A, Tb, X)]
    if callback:
        callback(0, X)
    while history[-1] > tol:
        k = len(history) - 1
        check_budget(SolveMethod.FPI, k, max_iter, history)
        C = Tb + X
        check_iterate(C, k)
        X = qt_neumann_inverse_shifted(C, inner_tol, neumann_max_terms) @ (Q + X @ Tb)
        history.append(residual(A, Tb, X))
        if callback:
            callback(k + 1, X)
        log.debug("fpi k=%d residual=%.3e correction=%dx%d", k + 1, history[-1], X.rows, X.cols)

    return X, make_report(SolveMethod.FPI, history, started, X, rank_tol)
