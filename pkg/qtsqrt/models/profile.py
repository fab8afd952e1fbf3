"""Input layer: instance specification and profile models."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from qtsqrt.models.qt import QtMatrix
from qtsqrt.models.results import InstanceFamily


@dataclass
class InstanceSpec:
    """What to generate (or load) and the precision to solve it at."""

    family: InstanceFamily
    seed: int = 0
    parameters: dict[str, Any] = field(default_factory=dict)  # family-specific
    threshold: float = 1e-15
    tol: float = 1e-13
    path: str | None = None  # family == FILE


@dataclass
class InstanceMetadata:
    """Facts about A = gamma (I - A1) captured at ingestion."""

    gamma: float
    a1_norm_inf: float
    a1_min_entry: float
    band: int
    correction_rows: int
    correction_cols: int
    a1_symbol_sum: float  # a1(1), equals ||a1||_W when A1 >= 0


@dataclass
class InstanceProfile:
    """Normalised instance after input layer processing."""

    A: QtMatrix  # as given
    A1: QtMatrix  # I - A / gamma
    metadata: InstanceMetadata
    hypotheses_ok: bool = True
    violations: list[str] = field(default_factory=list)

    @property
    def normalized(self) -> QtMatrix:
        """I - A1, the matrix whose square root the solvers compute."""
        from qtsqrt.qtcore.arithmetic import qt_identity

        return qt_identity(self.A1.threshold) - self.A1
