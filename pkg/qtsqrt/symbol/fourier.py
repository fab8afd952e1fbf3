"""Evaluation and interpolation at the m-th roots of unity via FFT.

Nodes are w_m^i for i = -n+1, ..., n with m = 2n and
w_m = cos(2 pi / m) + i sin(2 pi / m); arrays of node values are ordered
by i, so the value at w_m^i sits at position i + n - 1.
"""

from __future__ import annotations

import logging

import numpy as np

from qtsqrt.exceptions import HypothesisError, InterpolationError
from qtsqrt.models.symbol import LaurentSymbol

log = logging.getLogger(__name__)

IMAG_RESIDUE_TOL = 1e-10


def _check_size(m: int) -> int:
    if m < 2:
        raise HypothesisError(f"m must be at least 2, got {m}")
    if m & (m - 1):
        raise HypothesisError(f"m must be a power of two, got {m}")
    return m // 2


def node_exponents(m: int) -> np.ndarray:
    n = _check_size(m)
    return np.arange(-n + 1, n + 1)


def eval_roots_of_unity(a: LaurentSymbol, m: int) -> np.ndarray:
    """a(w_m^i) for i = -n+1..n from one FFT of the wrapped coefficients."""
    exps = node_exponents(m)
    full, q = a.coefficients()
    wrapped = np.zeros(m)
    np.add.at(wrapped, (np.arange(full.size) - q) % m, full)
    # ifft carries exp(+2 pi i r k / m) / m
    values = np.fft.ifft(wrapped) * m
    return values[exps % m]


def interpolate_with_residue(values: np.ndarray, m: int) -> tuple[LaurentSymbol, float]:
    """Real Laurent interpolant and the largest discarded imaginary part."""
    exps = node_exponents(m)
    values = np.asarray(values, dtype=complex).reshape(-1)
    if values.size != m:
        raise HypothesisError(f"expected {m} node values, got {values.size}")
    placed = np.zeros(m, dtype=complex)
    placed[exps % m] = values
    coeffs = np.fft.fft(placed)[exps % m] / m
    residue = float(np.abs(coeffs.imag).max())
    scale = float(np.abs(values).max())
    if residue > IMAG_RESIDUE_TOL * scale:
        raise InterpolationError(
            f"imaginary residue {residue:.3e} exceeds {IMAG_RESIDUE_TOL:g} * max|values|; "
            "node values are not conjugate-symmetric",
            residue,
        )
    log.debug("interpolated m=%d, imaginary residue %.3e", m, residue)
    # exps starts at -n+1, so a_0 sits at offset n-1
    return LaurentSymbol.from_coefficients(coeffs.real, m // 2 - 1), residue


def interpolate(values: np.ndarray, m: int) -> LaurentSymbol:
    """The Laurent polynomial sum_{j=-n+1}^{n} b_j z^j matching values at the nodes."""
    return interpolate_with_residue(values, m)[0]
