"""Exact structured arithmetic on QT matrices T(a) + E.

Every operation returns a compressed result; the compression threshold is
the larger of the operands' thresholds.
"""

from __future__ import annotations

import numpy as np

from qtsqrt.exceptions import HypothesisError
from qtsqrt.models.qt import CorrectionBlock, QtMatrix
from qtsqrt.models.symbol import LaurentSymbol
from qtsqrt.qtcore.dense import (
    hankel_negative,
    hankel_positive,
    qt_dense_window,
    toeplitz_block,
)
from qtsqrt.symbol import add, mul, scale, trim, wiener_norm


def qt_identity(threshold: float = 0.0) -> QtMatrix:
    return QtMatrix(LaurentSymbol.constant(1.0), CorrectionBlock.empty(), threshold)


def qt_zero(threshold: float = 0.0) -> QtMatrix:
    return QtMatrix(LaurentSymbol.zero(), CorrectionBlock.empty(), threshold)


def qt_toeplitz(a: LaurentSymbol, threshold: float = 0.0) -> QtMatrix:
    return QtMatrix(a, CorrectionBlock.empty(), threshold)


def qt_from_correction(E: np.ndarray, threshold: float = 0.0) -> QtMatrix:
    """Zero symbol with correction E, compressed."""
    return qt_compress(QtMatrix(LaurentSymbol.zero(), CorrectionBlock(E), threshold), threshold)


def _accumulate(blocks: list[np.ndarray]) -> np.ndarray:
    blocks = [b for b in blocks if b.size]
    if not blocks:
        return np.zeros((0, 0))
    rows = max(b.shape[0] for b in blocks)
    cols = max(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols))
    for b in blocks:
        out[: b.shape[0], : b.shape[1]] += b
    return out


def qt_compress(A: QtMatrix, threshold: float) -> QtMatrix:
    """Trim the symbol and drop negligible trailing correction rows/columns.

    ||A - qt_compress(A, t)||_inf <= 2 t: the symbol loses at most t in Wiener
    norm, dropped rows each carry at most t/2 and dropped columns at most
    t/2 in aggregate.
    """
    if threshold < 0:
        raise HypothesisError("compression threshold must be nonnegative")
    symbol = trim(A.symbol, threshold)
    E = A.correction.data
    if E.size:
        row_sums = np.abs(E).sum(axis=1)
        keep = np.flatnonzero(row_sums > threshold / 2)
        E = E[: keep[-1] + 1] if keep.size else E[:0]
    if E.size:
        col_tail = np.cumsum(np.abs(E).sum(axis=0)[::-1])
        drop = int(np.searchsorted(col_tail, threshold / 2, side="right"))
        E = E[:, : E.shape[1] - drop]
    return QtMatrix(symbol, CorrectionBlock(E), threshold)


def qt_add(A: QtMatrix, B: QtMatrix) -> QtMatrix:
    threshold = max(A.threshold, B.threshold)
    E = _accumulate([A.correction.data, B.correction.data])
    return qt_compress(QtMatrix(add(A.symbol, B.symbol), CorrectionBlock(E)), threshold)


def qt_scale(A: QtMatrix, factor: float) -> QtMatrix:
    E = A.correction.data * factor
    return qt_compress(QtMatrix(scale(A.symbol, factor), CorrectionBlock(E)), A.threshold)


def qt_sub(A: QtMatrix, B: QtMatrix) -> QtMatrix:
    return qt_add(A, qt_scale(B, -1.0))


def qt_mul(A: QtMatrix, B: QtMatrix) -> QtMatrix:
    """AB = T(ab) - H(a^-)H(b^+) + T(a)E_B + E_A T(b) + E_A E_B.

    All four correction terms are finite and exact: T(a)E_B extends E_B by
    q_a rows, E_A T(b) extends E_A by p_b columns.
    """
    a, b = A.symbol, B.symbol
    EA, EB = A.correction.data, B.correction.data
    blocks: list[np.ndarray] = []

    inner = min(a.q, b.p)
    if inner:
        blocks.append(-hankel_negative(a)[:, :inner] @ hankel_positive(b)[:inner, :])
    if EB.size:
        blocks.append(toeplitz_block(a, EB.shape[0] + a.q, EB.shape[0]) @ EB)
    if EA.size:
        blocks.append(EA @ toeplitz_block(b, EA.shape[1], EA.shape[1] + b.p))
    inner = min(EA.shape[1], EB.shape[0])
    if inner:
        blocks.append(EA[:, :inner] @ EB[:inner, :])

    product = QtMatrix(mul(a, b), CorrectionBlock(_accumulate(blocks)))
    return qt_compress(product, max(A.threshold, B.threshold))


def qt_norm_inf(A: QtMatrix) -> float:
    """sup_i sum_j |a_{j-i} + e_{i,j}|, exact.

    Toeplitz row sums increase to ||a||_W and the correction vanishes past
    row r, so only rows up to max(r, q) need explicit summation.
    """
    a = A.symbol
    total = wiener_norm(a)
    rows = max(A.rows, a.q)
    if rows == 0:
        return total
    cols = max(A.cols, rows + a.p)
    window = qt_dense_window(A, rows, cols)
    return max(float(np.abs(window).sum(axis=1).max()), total)


def qt_min_entry(A: QtMatrix) -> float:
    """Smallest entry of T(a) + E (zero counts, the matrix is infinite)."""
    full, _ = A.symbol.coefficients()
    smallest = min(0.0, float(full.min()))
    if A.correction.is_empty:
        return smallest
    window = qt_dense_window(A, A.rows, A.cols)
    return min(smallest, float(window.min()))


def qt_block_norm_inf(A: QtMatrix, k: int, block: str) -> float:
    """Infinity norm of one block of A partitioned after row/column k.

    block is one of "11", "12", "21", "22"; the leading block is k x k.
    """
    if block not in {"11", "12", "21", "22"}:
        raise HypothesisError(f"unknown block {block!r}")
    a = A.symbol
    rows = max(A.rows, k) + a.q + 1  # past this row nothing couples to columns <= k
    cols = max(A.cols, rows + a.p) + 1
    window = np.abs(qt_dense_window(A, rows, cols))
    if block == "11":
        part = window[:k, :k]
    elif block == "12":
        part = window[:k, k:]
    elif block == "21":
        part = window[k:, :k]
    else:
        part = window[k:, k:]
    value = float(part.sum(axis=1).max()) if part.size else 0.0
    if block == "22":
        # rows beyond the window see the whole symbol
        value = max(value, wiener_norm(a))
    return value
