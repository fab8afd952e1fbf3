"""Square root of a Laurent symbol by evaluation/interpolation.

Given a(z) = gamma (1 - b(z))^2 with b(1) < 1, compute b = 1 - sqrt(a/gamma)
at the m-th roots of unity, interpolate, and double m until the second
derivative at 1 of the interpolant matches the one obtained analytically
from a(1), a'(1), a''(1).
"""

from __future__ import annotations

import logging
import math

import numpy as np

from qtsqrt.exceptions import ConvergenceError, HypothesisError
from qtsqrt.models.results import SymbolSqrtResult
from qtsqrt.models.symbol import LaurentSymbol
from qtsqrt.symbol import (
    add,
    derivatives_at_one,
    eval_roots_of_unity,
    interpolate_with_residue,
    mul,
    scale,
    wiener_norm,
)

log = logging.getLogger(__name__)

INITIAL_N = 4
NEGATIVE_DELTA_WARN = -1e-10
_UNIT_ROUNDOFF = float(np.finfo(float).eps)


def _derivatives_of_root(a: LaurentSymbol, gamma: float) -> tuple[float, float, float]:
    a1, ap1, app1 = derivatives_at_one(a)
    if a1 <= 0:
        raise HypothesisError(f"a(1) must be positive, got {a1:.6g}")
    b1 = 1.0 - math.sqrt(a1 / gamma)
    if b1 == 1.0:
        raise HypothesisError("b(1) = 1: a(1)/gamma underflows, the root is not invertible")
    denom = 2.0 * gamma * (b1 - 1.0)
    bp1 = ap1 / denom
    bpp1 = (app1 - 2.0 * gamma * bp1**2) / denom
    return b1, bp1, bpp1


def _root_values(a: LaurentSymbol, gamma: float, m: int) -> np.ndarray:
    values = eval_roots_of_unity(a, m) / gamma
    tiny = 1e-14 * max(1.0, float(np.abs(values).max()))
    on_cut = (values.real <= 0) & (np.abs(values.imag) <= tiny) & (np.abs(values) > tiny)
    if on_cut.any():
        node = int(np.flatnonzero(on_cut)[0]) - m // 2 + 1
        raise HypothesisError(
            f"a(w^{node})/gamma = {values[on_cut][0].real:.6g} lies on the square-root branch cut"
        )
    return 1.0 - np.sqrt(values)


def _noise_floor(bhat: LaurentSymbol, bpp1: float, samples: np.ndarray) -> float:
    """Rounding error expected in b''(1) - bhat''(1) at this interpolation size."""
    full, _ = bhat.coefficients()
    j = bhat.indices().astype(float)
    weights = j * (j - 1.0)
    summation = abs(bpp1) + float(np.abs(weights * full).sum())
    transform = float(np.abs(samples).max()) * math.sqrt(float((weights**2).sum()))
    return 8.0 * _UNIT_ROUNDOFF * (summation + transform)


def sqrt_symbol(
    a: LaurentSymbol,
    gamma: float = 1.0,
    eps: float = 1e-13,
    n_max: int = 2**20,
) -> SymbolSqrtResult:
    """Approximate b = 1 - sqrt(a/gamma) to Wiener accuracy about eps.

    Stops once delta_m = b''(1) - bhat''(1) drops below eps, or below the
    rounding floor of delta_m when that is larger.
    """
    if gamma <= 0:
        raise HypothesisError(f"gamma must be positive, got {gamma}")
    if eps <= 0:
        raise HypothesisError(f"eps must be positive, got {eps}")
    b1, bp1, bpp1 = _derivatives_of_root(a, gamma)

    n, doublings = INITIAL_N, 0
    while True:
        m = 2 * n
        samples = _root_values(a, gamma, m)
        bhat, residue = interpolate_with_residue(samples, m)
        delta = bpp1 - derivatives_at_one(bhat)[2]
        floor = _noise_floor(bhat, bpp1, samples)
        log.debug("n=%d delta_m=%.3e floor=%.3e", n, delta, floor)
        if delta < NEGATIVE_DELTA_WARN:
            log.warning(
                "delta_m = %.3e < 0 at n=%d: b may have negative coefficients", delta, n
            )
        if delta < max(eps, floor):
            if delta >= eps:
                log.warning(
                    "delta_m = %.3e above eps = %.3g at n=%d; stopped on the rounding floor %.3e",
                    delta,
                    eps,
                    n,
                    floor,
                )
            log.info("symbol square root converged at n=%d (delta_m=%.3e)", n, delta)
            return SymbolSqrtResult(
                bhat=bhat,
                n_final=n,
                delta_m=delta,
                b1=b1,
                bp1=bp1,
                bpp1=bpp1,
                noise_floor=floor,
                imag_residue=residue,
                doublings=doublings,
            )
        if 2 * n > n_max:
            raise ConvergenceError(
                f"delta_m = {delta:.3e} still above {eps:g} at n = {n} (n_max {n_max})",
                iterations=doublings,
                residual=delta,
            )
        n *= 2
        doublings += 1


def check_interpolation_bound(
    b_ref: LaurentSymbol, bhat: LaurentSymbol, eps: float, n: int
) -> bool:
    """||b_ref - bhat||_W <= (1 + 1/(2n)) eps."""
    return wiener_norm(add(b_ref, scale(bhat, -1.0))) <= (1.0 + 1.0 / (2 * n)) * eps


def symbol_residual(a: LaurentSymbol, gamma: float, bhat: LaurentSymbol) -> float:
    """||gamma (1 - bhat)^2 - a||_W."""
    root = add(LaurentSymbol.constant(1.0), scale(bhat, -1.0))
    return wiener_norm(add(scale(mul(root, root), gamma), scale(a, -1.0)))
