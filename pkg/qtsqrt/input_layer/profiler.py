"""Normalise A = gamma (I - A1) and check the hypotheses the solvers rely on."""

from __future__ import annotations

import logging

from qtsqrt.exceptions import HypothesisError
from qtsqrt.models.profile import InstanceMetadata, InstanceProfile
from qtsqrt.models.qt import QtMatrix
from qtsqrt.qtcore import qt_identity, qt_min_entry, qt_norm_inf, qt_scale
from qtsqrt.symbol import derivatives_at_one

log = logging.getLogger(__name__)


def create_profile(A: QtMatrix, gamma: float = 1.0) -> InstanceProfile:
    """InstanceProfile with A1 = I - A/gamma; violations listed, not raised."""
    if gamma <= 0:
        raise HypothesisError(f"gamma must be positive, got {gamma}")
    A1 = qt_identity(A.threshold) - qt_scale(A, 1.0 / gamma)
    norm = qt_norm_inf(A1)
    smallest = qt_min_entry(A1)
    metadata = InstanceMetadata(
        gamma=gamma,
        a1_norm_inf=norm,
        a1_min_entry=smallest,
        band=A1.symbol.band,
        correction_rows=A1.rows,
        correction_cols=A1.cols,
        a1_symbol_sum=derivatives_at_one(A1.symbol)[0],
    )
    violations = []
    if smallest < -max(A.threshold, 1e-14):
        violations.append(f"A1 has a negative entry {smallest:.3e}")
    if norm >= 1.0:
        violations.append(f"||A1||_inf = {norm:.12g} is not below 1")
    for v in violations:
        log.warning("hypothesis violated: %s", v)
    return InstanceProfile(
        A=A,
        A1=A1,
        metadata=metadata,
        hypotheses_ok=not violations,
        violations=violations,
    )


def require_hypotheses(profile: InstanceProfile) -> None:
    if not profile.hypotheses_ok:
        raise HypothesisError("; ".join(profile.violations))
