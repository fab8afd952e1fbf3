"""Result and report types for all qtsqrt layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from qtsqrt.models.qt import DenseMatrix, QtMatrix
from qtsqrt.models.symbol import LaurentSymbol


class SolveMethod(str, Enum):
    FPI = "fpi"
    SDA = "sda"
    SDA_REFINE = "sda-refine"
    BINOMIAL = "binomial"
    TRUNCATED_FPI = "truncated-fpi"
    TRUNCATED_SDA = "truncated-sda"


class InstanceFamily(str, Enum):
    EXAMPLE1 = "example1"  # random banded S scaled below unit norm
    EXAMPLE2 = "example2"  # diagonal Toeplitz part, block correction
    EXAMPLE3 = "example3"  # A = c I - T(s)
    FILE = "file"


@dataclass
class SymbolSqrtResult:
    """Output of the evaluation/interpolation symbol square root.

    On success delta_m < max(eps, noise_floor): when rounding in delta_m
    exceeds the requested eps, noise_floor stands in for eps and the run
    logs a warning.
    """

    bhat: LaurentSymbol
    n_final: int
    delta_m: float
    b1: float
    bp1: float
    bpp1: float
    noise_floor: float = 0.0  # estimated rounding error of delta_m
    imag_residue: float = 0.0
    doublings: int = 0


@dataclass
class CorrectionStats:
    """Band of the Toeplitz part and shape/rank of the correction."""

    band: int
    rows: int
    cols: int
    rank: int

    def to_dict(self) -> dict[str, int]:
        return {"band": self.band, "rows": self.rows, "cols": self.cols, "rank": self.rank}


@dataclass
class SolveReport:
    """Per-method record of a solve: iterations, residuals, timing, stats."""

    method: SolveMethod
    iterations: int
    residual_history: list[float] = field(default_factory=list)
    final_residual: float = float("nan")
    wall_time: float = 0.0
    stats: CorrectionStats | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method.value,
            "iterations": self.iterations,
            "residuals": list(self.residual_history),
            "final_residual": self.final_residual,
            "wall_time_s": self.wall_time,
            "stats": self.stats.to_dict() if self.stats else None,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SolveReport:
        stats = data.get("stats")
        return cls(
            method=SolveMethod(data["method"]),
            iterations=int(data["iterations"]),
            residual_history=[float(x) for x in data.get("residuals", [])],
            final_residual=float(data["final_residual"]),
            wall_time=float(data.get("wall_time_s", 0.0)),
            stats=CorrectionStats(**stats) if stats else None,
        )


@dataclass
class SdaState:
    """The four doubling sequences at one step."""

    E: QtMatrix
    F: QtMatrix
    P: QtMatrix
    Q: QtMatrix


@dataclass
class FiniteEquation:
    """k x k blocks of the truncated equation (I_k - T11 - G)^2 = I - A11 - TT."""

    k: int
    T11: DenseMatrix
    A11: DenseMatrix
    TT: DenseMatrix  # T12 @ T21
    W11: DenseMatrix

    @property
    def target(self) -> DenseMatrix:
        return np.eye(self.k) - self.A11 - self.TT


@dataclass
class ExtensionDiagnostics:
    """Quantities deciding whether a k x k solution extends well to infinity."""

    g_t12: float
    t21_g: float
    w_offdiag: float  # max of ||W12||, ||W21||, ||W22||
    threshold: float  # c * eps
    residual: float  # full equation residual of T(b) + E_G
    passed: dict[str, bool] = field(default_factory=dict)


@dataclass
class BoundCheck:
    """Measured extension error against (1 + alpha/(1-alpha beta)(2||b||+eps)) eps."""

    alpha: float
    beta: float
    eps: float
    measured: float
    bound: float
    slack: float = 0.0  # solver tolerance both solutions carry

    @property
    def holds(self) -> bool:
        return self.alpha * self.beta < 1 and self.measured <= self.bound + self.slack
