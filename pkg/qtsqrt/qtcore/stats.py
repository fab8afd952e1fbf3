"""Band and correction statistics reported next to each solve."""

from __future__ import annotations

import numpy as np
import scipy.linalg

from qtsqrt.exceptions import HypothesisError
from qtsqrt.models.qt import QtMatrix
from qtsqrt.models.results import CorrectionStats
from qtsqrt.qtcore.arithmetic import qt_compress


def numerical_rank(E: np.ndarray, tol: float) -> int:
    """Count of pivoted-QR diagonal entries above tol * ||E||_inf."""
    if E.size == 0:
        return 0
    scale = float(np.abs(E).sum(axis=1).max())
    if scale == 0.0:
        return 0
    R, _ = scipy.linalg.qr(E, mode="r", pivoting=True)
    diag = np.abs(np.diag(R))
    return int(np.count_nonzero(diag > tol * scale))


def correction_stats(A: QtMatrix, tol: float) -> CorrectionStats:
    if tol < 0:
        raise HypothesisError("rank tolerance must be nonnegative")
    compressed = qt_compress(A, A.threshold)
    return CorrectionStats(
        band=compressed.symbol.band,
        rows=compressed.rows,
        cols=compressed.cols,
        rank=numerical_rank(compressed.correction.data, tol),
    )
