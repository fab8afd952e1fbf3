"""qtsqrt data models and result types."""

from qtsqrt.models.symbol import LaurentSymbol
from qtsqrt.models.qt import CorrectionBlock, DenseMatrix, QtMatrix
from qtsqrt.models.results import (
    BoundCheck,
    CorrectionStats,
    ExtensionDiagnostics,
    FiniteEquation,
    InstanceFamily,
    SdaState,
    SolveMethod,
    SolveReport,
    SymbolSqrtResult,
)
from qtsqrt.models.profile import InstanceMetadata, InstanceProfile, InstanceSpec

__all__ = [
    "LaurentSymbol",
    "CorrectionBlock",
    "DenseMatrix",
    "QtMatrix",
    "BoundCheck",
    "CorrectionStats",
    "ExtensionDiagnostics",
    "FiniteEquation",
    "InstanceFamily",
    "SdaState",
    "SolveMethod",
    "SolveReport",
    "SymbolSqrtResult",
    "InstanceMetadata",
    "InstanceProfile",
    "InstanceSpec",
]
