"""Binomial iteration Y_{k+1} = (A1 + Y_k^2) / 2, the baseline for the full root."""

from __future__ import annotations

import logging
import time

from qtsqrt.models.qt import QtMatrix
from qtsqrt.models.results import SolveMethod, SolveReport
from qtsqrt.qtcore import qt_identity, qt_zero
from qtsqrt.solvers.residual import check_budget, make_report, residual

log = logging.getLogger(__name__)


def binomial_sqrt(
    A1: QtMatrix,
    tol: float = 1e-13,
    max_iter: int = 500,
    rank_tol: float = 1e-12,
) -> tuple[QtMatrix, SolveReport]:
    """B with (I - B)^2 = I - A1; returns the whole B, symbol included."""
    started = time.perf_counter()
    threshold = A1.threshold
    A = qt_identity(threshold) - A1
    zero = qt_zero(threshold)
    Y = zero
    history = [residual(A, zero, Y)]
    while history[-1] > tol:
        k = len(history) - 1
        check_budget(SolveMethod.BINOMIAL, k, max_iter, history)
        Y = 0.5 * (A1 + Y @ Y)
        history.append(residual(A, zero, Y))
        log.debug("binomial k=%d residual=%.3e", k + 1, history[-1])
    return Y, make_report(SolveMethod.BINOMIAL, history, started, Y, rank_tol)
