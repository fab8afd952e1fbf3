"""Residual metric and report assembly shared by the correction solvers."""

from __future__ import annotations

import logging
import time

from qtsqrt.exceptions import ConvergenceError
from qtsqrt.models.qt import QtMatrix
from qtsqrt.models.results import SolveMethod, SolveReport
from qtsqrt.qtcore import correction_stats, qt_identity, qt_norm_inf

log = logging.getLogger(__name__)


def residual(A: QtMatrix, Tb: QtMatrix, X: QtMatrix) -> float:
    """||(I - Tb - X)^2 - A||_inf / ||A||_inf."""
    threshold = max(A.threshold, Tb.threshold, X.threshold)
    root = qt_identity(threshold) - Tb - X
    scale = qt_norm_inf(A)
    if scale == 0.0:
        return qt_norm_inf(root @ root)
    return qt_norm_inf(root @ root - A) / scale


def check_budget(method: SolveMethod, iterations: int, max_iter: int, history: list[float]) -> None:
    if iterations >= max_iter:
        raise ConvergenceError(
            f"{method.value} reached max_iter={max_iter} at residual {history[-1]:.3e}",
            iterations=iterations,
            residual=history[-1],
        )


def make_report(
    method: SolveMethod,
    history: list[float],
    started: float,
    X: QtMatrix,
    rank_tol: float,
) -> SolveReport:
    """SolveReport with wall time measured from started (time.perf_counter)."""
    elapsed = time.perf_counter() - started
    iterations = len(history) - 1
    log.info(
        "%s converged in %d iterations, residual %.3e, %.3fs",
        method.value,
        iterations,
        history[-1],
        elapsed,
    )
    return SolveReport(
        method=method,
        iterations=iterations,
        residual_history=list(history),
        final_residual=history[-1],
        wall_time=elapsed,
        stats=correction_stats(X, rank_tol),
    )
