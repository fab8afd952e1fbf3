"""Wiener-algebra arithmetic on finitely supported Laurent symbols."""

from __future__ import annotations

import numpy as np

from qtsqrt.exceptions import HypothesisError
from qtsqrt.models.symbol import LaurentSymbol


def wiener_norm(a: LaurentSymbol) -> float:
    """||a||_W = sum_j |a_j|."""
    return float(np.abs(a.neg).sum() + np.abs(a.pos).sum())


def add(a: LaurentSymbol, b: LaurentSymbol) -> LaurentSymbol:
    neg = np.zeros(max(a.q, b.q))
    pos = np.zeros(max(a.pos.size, b.pos.size))
    neg[: a.q] += a.neg
    neg[: b.q] += b.neg
    pos[: a.pos.size] += a.pos
    pos[: b.pos.size] += b.pos
    return LaurentSymbol(neg=neg, pos=pos)


def scale(a: LaurentSymbol, factor: float) -> LaurentSymbol:
    return LaurentSymbol(neg=a.neg * factor, pos=a.pos * factor)


def mul(a: LaurentSymbol, b: LaurentSymbol) -> LaurentSymbol:
    """Coefficient convolution; the band grows to [-(q_a+q_b), p_a+p_b]."""
    fa, qa = a.coefficients()
    fb, qb = b.coefficients()
    # direct convolution: trim() needs relatively accurate tail coefficients
    return LaurentSymbol.from_coefficients(np.convolve(fa, fb), qa + qb)


def evaluate(a: LaurentSymbol, z: complex) -> complex:
    """sum_j a_j z^j by Horner on the two halves."""
    if z == 0:
        raise HypothesisError("Laurent symbols cannot be evaluated at z = 0")
    value = np.polyval(a.pos[::-1], z)
    if a.q:
        w = 1.0 / z
        value = value + w * np.polyval(a.neg[::-1], w)
    return complex(value)


def derivatives_at_one(a: LaurentSymbol) -> tuple[float, float, float]:
    """(a(1), a'(1), a''(1)) as exact finite sums."""
    full, _ = a.coefficients()
    j = a.indices().astype(float)
    return float(full.sum()), float((j * full).sum()), float((j * (j - 1.0) * full).sum())


def _tail_cut(values: np.ndarray, budget: float) -> tuple[int, float]:
    """How many trailing entries fit in budget, and the mass they carry."""
    if values.size == 0:
        return 0, 0.0
    cum = np.cumsum(np.abs(values[::-1]))
    count = int(np.searchsorted(cum, budget, side="right"))
    return count, float(cum[count - 1]) if count else 0.0


def trim(a: LaurentSymbol, threshold: float) -> LaurentSymbol:
    """Drop band-edge coefficients whose cumulative mass stays within threshold.

    ||a - trim(a, threshold)||_W <= threshold.
    """
    if threshold < 0:
        raise HypothesisError("trim threshold must be nonnegative")
    cut_pos, used = _tail_cut(a.pos, threshold)
    cut_neg, _ = _tail_cut(a.neg, threshold - used)
    pos = a.pos[: a.pos.size - cut_pos]
    neg = a.neg[: a.q - cut_neg]
    return LaurentSymbol(neg=neg, pos=pos)
