"""Seeded generators for the three benchmark families.

All randomness comes from numpy's PCG64 (np.random.default_rng(seed)), so
the same seed reproduces the same instance bit for bit.
"""

from __future__ import annotations

import numpy as np

from qtsqrt.exceptions import HypothesisError
from qtsqrt.models.qt import CorrectionBlock, QtMatrix
from qtsqrt.models.symbol import LaurentSymbol
from qtsqrt.qtcore import qt_identity, qt_norm_inf, qt_toeplitz


def _banded_symbol(s_neg: np.ndarray, s_pos: np.ndarray) -> LaurentSymbol:
    # both first entries index a_0, which is set once
    s_neg[0] = s_pos[0] = 1.0
    return LaurentSymbol(neg=s_neg[1:], pos=s_pos)


def gen_example1(
    seed: int,
    band_neg: int,
    band_pos: int,
    corr_dim: int = 0,
    threshold: float = 1e-15,
) -> QtMatrix:
    """A = I - S with S = S~ / (||S~|| + 1), S~ random nonnegative."""
    if band_neg < 1 or band_pos < 1 or corr_dim < 0:
        raise HypothesisError("band sizes must be at least 1 and corr_dim nonnegative")
    rng = np.random.default_rng(seed)
    symbol = _banded_symbol(rng.random(band_neg), rng.random(band_pos))
    correction = rng.random((corr_dim, corr_dim)) if corr_dim else np.zeros((0, 0))
    S_tilde = QtMatrix(symbol, CorrectionBlock(correction), threshold)
    S = (1.0 / (qt_norm_inf(S_tilde) + 1.0)) * S_tilde
    return qt_identity(threshold) - S


def gen_example2(
    s0: float,
    m: int,
    n: int,
    p: int,
    q: int,
    seed: int = 0,
    row_mass: float = 0.9,
    threshold: float = 1e-15,
) -> QtMatrix:
    """A = I - S, S = s0 I + diag(V_p, O_m, -s0 I_n).

    V_p is q x q: a p x q block U with u_ii = -s0 and nonnegative strictly
    upper entries summing to row_mass per row, over zero rows.
    """
    if not 0 < s0 < 1:
        raise HypothesisError(f"s0 must lie in (0, 1), got {s0}")
    if not 1 <= p <= q:
        raise HypothesisError(f"need 1 <= p <= q, got p={p}, q={q}")
    if m < 0 or n < 0:
        raise HypothesisError("m and n must be nonnegative")
    if not 0 <= row_mass < 1:
        raise HypothesisError(f"row_mass must lie in [0, 1), got {row_mass}")
    rng = np.random.default_rng(seed)
    U = np.triu(rng.random((p, q)), k=1)
    sums = U.sum(axis=1, keepdims=True)
    U = np.divide(row_mass * U, sums, out=np.zeros_like(U), where=sums > 0)
    U[np.arange(p), np.arange(p)] = -s0

    size = q + m + n
    E = np.zeros((size, size))
    E[:p, :q] = U
    E[q + m :, q + m :] = -s0 * np.eye(n)
    S = QtMatrix(LaurentSymbol.constant(s0), CorrectionBlock(E), threshold)
    return qt_identity(threshold) - S


def gen_example3(seed: int, p: int, q: int, threshold: float = 1e-15) -> tuple[QtMatrix, float]:
    """A = c I - T(s) with c = sum(s_n) + sum(s_p); returns (A, c)."""
    if p < 1 or q < 1:
        raise HypothesisError(f"p and q must be at least 1, got p={p}, q={q}")
    rng = np.random.default_rng(seed)
    s_pos = rng.random(p)
    s_neg = rng.random(q)
    symbol = _banded_symbol(s_neg, s_pos)
    c = float(s_neg.sum() + s_pos.sum())
    A = c * qt_identity(threshold) - qt_toeplitz(symbol, threshold)
    return A, c
