"""Finite Toeplitz/Hankel blocks, dense truncations and the dense root oracle."""

from __future__ import annotations

import logging

import numpy as np
import scipy.linalg

from qtsqrt.exceptions import BreakdownError, ConvergenceError, HypothesisError
from qtsqrt.models.qt import DenseMatrix, QtMatrix
from qtsqrt.models.symbol import LaurentSymbol

log = logging.getLogger(__name__)


def dense_norm_inf(M: np.ndarray) -> float:
    if M.size == 0:
        return 0.0
    return float(np.abs(M).sum(axis=1).max())


def toeplitz_block(a: LaurentSymbol, rows: int, cols: int) -> DenseMatrix:
    """Leading rows x cols block of T(a), entries a_{j-i}."""
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols))
    first_col = a.coefficients_at(-np.arange(rows))
    first_row = a.coefficients_at(np.arange(cols))
    return scipy.linalg.toeplitz(first_col, first_row)


def toeplitz_window(a: LaurentSymbol, row0: int, rows: int, col0: int, cols: int) -> DenseMatrix:
    """Block of T(a) starting at 0-based (row0, col0)."""
    offsets = (col0 + np.arange(cols))[None, :] - (row0 + np.arange(rows))[:, None]
    return a.coefficients_at(offsets)


def hankel_negative(a: LaurentSymbol) -> DenseMatrix:
    """Nonzero q x q corner of H(a^-), entries a_{-i-j+1} (1-based)."""
    return scipy.linalg.hankel(a.neg) if a.q else np.zeros((0, 0))


def hankel_positive(a: LaurentSymbol) -> DenseMatrix:
    """Nonzero p x p corner of H(a^+), entries a_{i+j-1} (1-based)."""
    return scipy.linalg.hankel(a.pos[1:]) if a.p else np.zeros((0, 0))


def qt_dense_window(A: QtMatrix, rows: int, cols: int) -> DenseMatrix:
    return toeplitz_block(A.symbol, rows, cols) + A.correction.padded(rows, cols)


def qt_truncate_dense(A: QtMatrix, N: int) -> DenseMatrix:
    """N x N leading principal block of T(a) + E."""
    if N < 1:
        raise HypothesisError(f"truncation size must be positive, got {N}")
    return qt_dense_window(A, N, N)


def dense_sqrt_oracle(M: DenseMatrix, tol: float = 1e-14, max_iter: int = 100) -> DenseMatrix:
    """Principal square root of a nonsingular M-matrix by Denman-Beavers.

    Y_{k+1} = (Y_k + Z_k^-1)/2, Z_{k+1} = (Z_k + Y_k^-1)/2 with Y_0 = M, Z_0 = I,
    followed by one Newton step against M.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise HypothesisError(f"oracle needs a square matrix, got shape {M.shape}")
    Y = M.copy()
    Z = np.eye(M.shape[0])
    for k in range(1, max_iter + 1):
        try:
            Y_inv = scipy.linalg.inv(Y, check_finite=True)
            Z_inv = scipy.linalg.inv(Z, check_finite=True)
        except (scipy.linalg.LinAlgError, ValueError) as exc:
            raise BreakdownError(f"Denman-Beavers inverse failed at step {k}: {exc}") from exc
        Y_next = 0.5 * (Y + Z_inv)
        Z = 0.5 * (Z + Y_inv)
        step = dense_norm_inf(Y_next - Y)
        scale = dense_norm_inf(Y)
        Y = Y_next
        if step <= tol * scale:
            log.debug("Denman-Beavers converged in %d steps", k)
            break
    else:
        raise ConvergenceError("Denman-Beavers did not converge", iterations=max_iter)
    try:
        return 0.5 * (Y + scipy.linalg.solve(Y, M))
    except scipy.linalg.LinAlgError as exc:
        raise BreakdownError(f"Denman-Beavers polish failed: {exc}") from exc
