"""Dense fixed-point and doubling solvers for the k x k equation.

Both solve (I - T11 - G)^2 = I - A11 - TT, written as
(2I - T11 - G) G = Q + G T11 with Q = -W11.
"""

from __future__ import annotations

import logging
import time

import numpy as np
import scipy.linalg

from qtsqrt.exceptions import BreakdownError, ConvergenceError, HypothesisError
from qtsqrt.models.qt import DenseMatrix
from qtsqrt.models.results import FiniteEquation, SolveMethod, SolveReport
from qtsqrt.qtcore import dense_norm_inf

log = logging.getLogger(__name__)

NORM_SLACK = 1e-8


def finite_residual(eq: FiniteEquation, G: DenseMatrix) -> float:
    """||(I - T11 - G)^2 - (I - A11 - TT)|| / ||I - A11 - TT||."""
    root = np.eye(eq.k) - eq.T11 - G
    target = eq.target
    return dense_norm_inf(root @ root - target) / dense_norm_inf(target)


def _check_hypothesis(eq: FiniteEquation) -> None:
    norm = dense_norm_inf(eq.A11 + eq.TT)
    if norm >= 1.0:
        raise HypothesisError(f"||A11 + T12 T21|| = {norm:.12g} must be below 1")


def _solve(lhs: DenseMatrix, rhs: DenseMatrix, what: str) -> DenseMatrix:
    try:
        return scipy.linalg.solve(lhs, rhs)
    except scipy.linalg.LinAlgError as exc:
        raise BreakdownError(f"singular {what}: {exc}") from exc


def _report(method: SolveMethod, history: list[float], started: float) -> SolveReport:
    elapsed = time.perf_counter() - started
    log.info(
        "%s converged in %d iterations, residual %.3e", method.value, len(history) - 1, history[-1]
    )
    return SolveReport(
        method=method,
        iterations=len(history) - 1,
        residual_history=list(history),
        final_residual=history[-1],
        wall_time=elapsed,
    )


def _check_budget(method: SolveMethod, history: list[float], max_iter: int) -> None:
    if len(history) - 1 >= max_iter:
        raise ConvergenceError(
            f"{method.value} reached max_iter={max_iter} at residual {history[-1]:.3e}",
            iterations=max_iter,
            residual=history[-1],
        )


def solve_finite_fpi(
    eq: FiniteEquation, tol: float = 1e-13, max_iter: int = 500
) -> tuple[DenseMatrix, SolveReport]:
    started = time.perf_counter()
    _check_hypothesis(eq)
    identity = np.eye(eq.k)
    Q = -eq.W11
    G = np.zeros((eq.k, eq.k))
    history = [finite_residual(eq, G)]
    while history[-1] > tol:
        _check_budget(SolveMethod.TRUNCATED_FPI, history, max_iter)
        norm = dense_norm_inf(eq.T11 + G)
        if norm >= 1.0 + NORM_SLACK:
            raise BreakdownError(f"||T11 + G|| = {norm:.12g} is not below 1", norm=norm)
        G = _solve(2.0 * identity - eq.T11 - G, Q + G @ eq.T11, "2I - T11 - G")
        history.append(finite_residual(eq, G))
        log.debug("dense fpi k=%d residual=%.3e", len(history) - 1, history[-1])
    return G, _report(SolveMethod.TRUNCATED_FPI, history, started)


def solve_finite_sda(
    eq: FiniteEquation, tol: float = 1e-13, max_iter: int = 500
) -> tuple[DenseMatrix, SolveReport]:
    started = time.perf_counter()
    _check_hypothesis(eq)
    identity = np.eye(eq.k)
    S = _solve(2.0 * identity - eq.T11, identity, "2I - T11")
    E, F = S @ (eq.A11 + eq.TT), S
    P, Qk = S @ (-eq.W11), S
    history = [finite_residual(eq, P)]
    while history[-1] > tol:
        _check_budget(SolveMethod.TRUNCATED_SDA, history, max_iter)
        left = identity - Qk @ P
        right = identity - P @ Qk
        E, F, P, Qk = (
            E @ _solve(left, E, "I - QP"),
            F @ _solve(right, F, "I - PQ"),
            P + F @ _solve(right, P @ E, "I - PQ"),
            Qk + E @ _solve(left, Qk @ F, "I - QP"),
        )
        history.append(finite_residual(eq, P))
        log.debug("dense sda k=%d residual=%.3e", len(history) - 1, history[-1])
    return P, _report(SolveMethod.TRUNCATED_SDA, history, started)
