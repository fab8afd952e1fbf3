"""The k x k equation obtained by partitioning T(b) and W = 2T(b) - A1 - T(b)^2."""

from __future__ import annotations

import logging

import numpy as np

from qtsqrt.exceptions import HypothesisError
from qtsqrt.models.qt import DenseMatrix, QtMatrix
from qtsqrt.models.results import FiniteEquation
from qtsqrt.models.symbol import LaurentSymbol
from qtsqrt.qtcore import qt_toeplitz, qt_truncate_dense, toeplitz_block, toeplitz_window

log = logging.getLogger(__name__)


def choose_k(p: int, q: int, n1: int, n2: int) -> int:
    sizes = (p, q, n1, n2)
    if any(s < 0 for s in sizes):
        raise HypothesisError(f"sizes must be nonnegative, got {sizes}")
    if not any(sizes):
        raise HypothesisError("at least one of p, q, n1, n2 must be positive")
    return 3 * max(sizes)


def w_matrix(A1: QtMatrix, b: LaurentSymbol) -> QtMatrix:
    """W = 2T(b) - A1 - T(b)^2; its symbol vanishes when b is the exact root."""
    T = qt_toeplitz(b, A1.threshold)
    return 2.0 * T - A1 - T @ T


def suggest_k(A1: QtMatrix, b: LaurentSymbol) -> int:
    W = w_matrix(A1, b)
    return choose_k(b.p, b.q, W.rows, W.cols)


def upper_coupling(b: LaurentSymbol, k: int) -> DenseMatrix:
    """Nonzero k x p part of T12 (rows 1..k, columns k+1..k+p of T(b))."""
    return toeplitz_window(b, 0, k, k, b.p)


def lower_coupling(b: LaurentSymbol, k: int) -> DenseMatrix:
    """Nonzero q x k part of T21 (rows k+1..k+q, columns 1..k of T(b))."""
    return toeplitz_window(b, k, b.q, 0, k)


def build_finite_equation(A1: QtMatrix, b: LaurentSymbol, k: int) -> FiniteEquation:
    """Leading blocks of (I - T(b) - E)^2 = I - A1 for a k x k correction.

    T12 T21 is the finite band sum over columns k+1..k+min(p, q).
    """
    if k < 1:
        raise HypothesisError(f"k must be positive, got {k}")
    W = w_matrix(A1, b)
    needed = max(b.p, b.q, W.rows, W.cols)
    if k <= needed:
        log.warning(
            "k=%d does not exceed max(p, q, n1, n2) = %d; the extension may be poor", k, needed
        )
    depth = min(b.p, b.q)
    TT = np.zeros((k, k))
    if depth:
        TT = upper_coupling(b, k)[:, :depth] @ lower_coupling(b, k)[:depth, :]
    return FiniteEquation(
        k=k,
        T11=toeplitz_block(b, k, k),
        A11=qt_truncate_dense(A1, k),
        TT=TT,
        W11=qt_truncate_dense(W, k),
    )
