"""Structure-preserving doubling for the correction part.

The correction X solves X^2 + (T - 2I) X + X T + R = 0 with
R = T^2 - 2T + A1. With S = (2I - T)^{-1} the pencil is put in standard
structured form with E_0 = S A1, P_0 = S R, Q_0 = F_0 = S, and P_k -> X
quadratically. Refinement runs the same scheme with T replaced by
T + Einit and adds the limit to Einit.
"""

from __future__ import annotations

import logging
import time

import numpy as np

from qtsqrt.exceptions import HypothesisError
from qtsqrt.models.qt import CorrectionBlock, QtMatrix
from qtsqrt.models.results import SdaState, SolveMethod, SolveReport
from qtsqrt.models.symbol import LaurentSymbol
from qtsqrt.qtcore import (
    qt_identity,
    qt_neumann_inverse,
    qt_neumann_inverse_shifted,
    qt_norm_inf,
    qt_zero,
)
from qtsqrt.solvers.residual import check_budget, make_report, residual

log = logging.getLogger(__name__)


def substochastic_completion(b: LaurentSymbol, threshold: float = 0.0) -> QtMatrix:
    """(b(1) 1 - T(b) 1) e_1^T: row i carries the mass b_{-i} + b_{-i-1} + ...

    T(b) plus this correction has every row sum equal to b(1).
    """
    column = np.cumsum(b.neg[::-1])[::-1].reshape(-1, 1)
    return QtMatrix(LaurentSymbol.zero(), CorrectionBlock(column), threshold)


def initial_state(A1: QtMatrix, T: QtMatrix, inner_tol: float, max_terms: int) -> SdaState:
    S = qt_neumann_inverse_shifted(T, inner_tol, max_terms)
    R = T @ T - 2.0 * T + A1
    return SdaState(E=S @ A1, F=S, P=S @ R, Q=S)


def sda_step(state: SdaState, inner_tol: float, max_terms: int, margin: float) -> SdaState:
    """One doubling step; BreakdownError if ||Q P|| or ||P Q|| is not below 1 - margin."""
    E, F, P, Q = state.E, state.F, state.P, state.Q
    inv_qp = qt_neumann_inverse(Q @ P, inner_tol, max_terms, margin=margin)
    inv_pq = qt_neumann_inverse(P @ Q, inner_tol, max_terms, margin=margin)
    return SdaState(
        E=E @ inv_qp @ E,
        F=F @ inv_pq @ F,
        P=P + F @ inv_pq @ P @ E,
        Q=Q + E @ inv_qp @ Q @ F,
    )


def _run(
    method: SolveMethod,
    A1: QtMatrix,
    Tb: QtMatrix,
    Einit: QtMatrix,
    tol: float,
    max_iter: int,
    neumann_max_terms: int,
    neumann_margin: float,
    rank_tol: float,
) -> tuple[QtMatrix, SolveReport]:
    started = time.perf_counter()
    threshold = max(A1.threshold, Tb.threshold, Einit.threshold)
    A = qt_identity(threshold) - A1
    T = Tb + Einit
    norm = qt_norm_inf(T)
    if norm >= 1.0:
        raise HypothesisError(f"||T(b) + Einit|| = {norm:.12g} must be below 1")
    inner_tol = tol / 100

    state = initial_state(A1, T, inner_tol, neumann_max_terms)
    X = Einit + state.P
    history = [residual(A, Tb, X)]
    while history[-1] > tol:
        k = len(history) - 1
        check_budget(method, k, max_iter, history)
        state = sda_step(state, inner_tol, neumann_max_terms, neumann_margin)
        X = Einit + state.P
        history.append(residual(A, Tb, X))
        log.debug(
            "%s k=%d residual=%.3e ||E_k||=%.3e",
            method.value,
            k + 1,
            history[-1],
            qt_norm_inf(state.E),
        )

    return X, make_report(method, history, started, X, rank_tol)


def sda_correction(
    A1: QtMatrix,
    Tb: QtMatrix,
    tol: float = 1e-13,
    max_iter: int = 500,
    neumann_max_terms: int = 4096,
    neumann_margin: float = 1e-8,
    rank_tol: float = 1e-12,
) -> tuple[QtMatrix, SolveReport]:
    Einit = qt_zero(max(A1.threshold, Tb.threshold))
    return _run(
        SolveMethod.SDA, A1, Tb, Einit, tol, max_iter, neumann_max_terms, neumann_margin, rank_tol
    )


def sda_refine(
    A1: QtMatrix,
    Tb: QtMatrix,
    Einit: QtMatrix,
    tol: float = 1e-13,
    max_iter: int = 500,
    neumann_max_terms: int = 4096,
    neumann_margin: float = 1e-8,
    rank_tol: float = 1e-12,
) -> tuple[QtMatrix, SolveReport]:
    """Refine Einit, an approximation of the correction with ||T(b) + Einit|| < 1."""
    return _run(
        SolveMethod.SDA_REFINE,
        A1,
        Tb,
        Einit,
        tol,
        max_iter,
        neumann_max_terms,
        neumann_margin,
        rank_tol,
    )
