"""Inversion of I - M and 2I - C by Neumann series.

Partial sums are formed by doubling: S_{2K} = S_K (I + M^K), so 2^L terms
cost L squarings, each product compressed at the operand threshold.
"""

from __future__ import annotations

import logging
import math

from qtsqrt.exceptions import BreakdownError
from qtsqrt.models.qt import QtMatrix
from qtsqrt.qtcore.arithmetic import qt_identity, qt_norm_inf, qt_scale

log = logging.getLogger(__name__)

SHIFTED_MARGIN = 1e-8


def _terms_needed(norm: float, tol: float) -> int:
    """Smallest K with norm^K / (1 - norm) <= tol."""
    if norm == 0.0:
        return 1
    return max(1, math.ceil(math.log(tol * (1.0 - norm)) / math.log(norm)))


def qt_neumann_inverse(
    M: QtMatrix,
    tol: float,
    max_terms: int,
    margin: float = SHIFTED_MARGIN,
    strict: bool = True,
) -> QtMatrix:
    """(I - M)^{-1} as sum_i M^i.

    With ||M||_inf < 1 - margin the number of terms comes from the geometric
    tail bound. Otherwise strict=True raises; strict=False sums while the
    powers ||M^K|| keep contracting and stops once ||M^K|| ||S_K|| <= tol.
    """
    norm = qt_norm_inf(M)
    a_priori = norm < 1.0 - margin
    if a_priori:
        needed = _terms_needed(norm, tol)
        if needed > max_terms:
            raise BreakdownError(
                f"Neumann series needs {needed} terms (max {max_terms}) at norm {norm:.6g}",
                norm=norm,
            )
    elif strict:
        raise BreakdownError(f"Neumann series not guaranteed: ||M|| = {norm:.6g}", norm=norm)
    else:
        log.warning("||M|| = %.6g >= 1; summing Neumann series under a posteriori control", norm)

    S = qt_identity(M.threshold)
    P = M
    terms = 1
    while True:
        S = S + S @ P
        terms *= 2
        if a_priori and terms >= needed:
            return S
        P = P @ P
        if not a_priori:
            power = qt_norm_inf(P)
            if not math.isfinite(power):
                raise BreakdownError("Neumann powers overflowed", norm=norm)
            if power * qt_norm_inf(S) <= tol:
                log.debug("a posteriori Neumann series stopped after %d terms", terms)
                return S
        if terms > max_terms:
            raise BreakdownError(
                f"Neumann powers did not contract within {max_terms} terms", norm=norm
            )


def qt_neumann_inverse_shifted(C: QtMatrix, tol: float, max_terms: int) -> QtMatrix:
    """(2I - C)^{-1} = 1/2 sum_i (C/2)^i for ||C||_inf < 2."""
    norm = qt_norm_inf(C)
    if norm >= 2.0 - SHIFTED_MARGIN:
        raise BreakdownError(
            f"||C|| = {norm:.6g} too close to 2 for the shifted Neumann series", norm=norm
        )
    half = qt_neumann_inverse(qt_scale(C, 0.5), 2.0 * tol, max_terms, margin=SHIFTED_MARGIN / 2)
    return qt_scale(half, 0.5)
