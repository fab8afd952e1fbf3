"""Extending a k x k solution by zero and judging how well it extends."""

from __future__ import annotations

import logging

import numpy as np
import scipy.linalg

from qtsqrt.config import DEFAULT_SETTINGS
from qtsqrt.exceptions import BreakdownError
from qtsqrt.models.qt import DenseMatrix, QtMatrix
from qtsqrt.models.results import BoundCheck, ExtensionDiagnostics
from qtsqrt.qtcore import (
    dense_norm_inf,
    qt_block_norm_inf,
    qt_from_correction,
    qt_identity,
    qt_norm_inf,
    toeplitz_block,
)
from qtsqrt.solvers import residual
from qtsqrt.symbol import wiener_norm
from qtsqrt.truncated.equation import lower_coupling, upper_coupling, w_matrix

log = logging.getLogger(__name__)


def extend_to_infinity(G: DenseMatrix, threshold: float = 0.0) -> QtMatrix:
    """E_G: G in the leading k x k corner, zero elsewhere, zero symbol."""
    return qt_from_correction(np.asarray(G, dtype=float), threshold)


def verify_extension(
    A: QtMatrix,
    Tb: QtMatrix,
    G: DenseMatrix,
    eps: float,
    constant: float = 10.0,
) -> tuple[bool, ExtensionDiagnostics]:
    """Check ||G T12||, ||T21 G|| and the off-diagonal blocks of W against c * eps.

    A is the normalised matrix I - A1.
    """
    b = Tb.symbol
    k = G.shape[0]
    threshold = max(A.threshold, Tb.threshold)
    A1 = qt_identity(threshold) - A
    W = w_matrix(A1, b)

    g_t12 = dense_norm_inf(G @ upper_coupling(b, k))
    t21_g = dense_norm_inf(lower_coupling(b, k) @ G)
    w_offdiag = max(qt_block_norm_inf(W, k, block) for block in ("12", "21", "22"))
    limit = constant * eps
    passed = {"g_t12": g_t12 < limit, "t21_g": t21_g < limit, "w_offdiag": w_offdiag < limit}
    diagnostics = ExtensionDiagnostics(
        g_t12=g_t12,
        t21_g=t21_g,
        w_offdiag=w_offdiag,
        threshold=limit,
        residual=residual(A, Tb, extend_to_infinity(G, threshold)),
        passed=passed,
    )
    ok = all(passed.values())
    if not ok:
        failed = ", ".join(name for name, good in passed.items() if not good)
        log.warning("extension check failed at k=%d: %s", k, failed)
    return ok, diagnostics


def extension_error_bound(
    G: DenseMatrix,
    Tb: QtMatrix,
    E_ref: QtMatrix,
    slack: float = DEFAULT_SETTINGS.tol,
) -> BoundCheck:
    """Compare ||E_G - E_ref|| with (1 + alpha/(1 - alpha beta)(2||b|| + eps)) eps.

    alpha = ||(2I - T11 - G)^-1||, beta = ||T11 + E11||, eps = ||E_ref - E_ref^(k)||
    where E11 and E_ref^(k) are the leading k x k corner of E_ref. eps is
    floored at machine precision times ||E_ref|| and slack absorbs the solver
    tolerance of G and E_ref.
    """
    k = G.shape[0]
    T11 = toeplitz_block(Tb.symbol, k, k)
    E11 = E_ref.correction.padded(k, k)
    try:
        alpha = dense_norm_inf(scipy.linalg.inv(2.0 * np.eye(k) - T11 - G))
    except scipy.linalg.LinAlgError as exc:
        raise BreakdownError(f"2I - T11 - G is singular: {exc}") from exc
    beta = dense_norm_inf(T11 + E11)
    threshold = E_ref.threshold
    eps = max(
        qt_norm_inf(E_ref - extend_to_infinity(E11, threshold)),
        float(np.finfo(float).eps) * qt_norm_inf(E_ref),
    )
    measured = qt_norm_inf(extend_to_infinity(G, threshold) - E_ref)
    if alpha * beta < 1:
        bound = (1.0 + alpha / (1.0 - alpha * beta) * (2.0 * wiener_norm(Tb.symbol) + eps)) * eps
    else:
        bound = float("inf")
    return BoundCheck(alpha=alpha, beta=beta, eps=eps, measured=measured, bound=bound, slack=slack)
