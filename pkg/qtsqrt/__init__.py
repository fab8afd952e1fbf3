"""
Square roots of semi-infinite quasi-Toeplitz M-matrices.

A = gamma (I - A1) with A1 = T(a1) + E nonnegative and ||A1|| < 1 has the
principal square root sqrt(gamma) (I - B), B = T(b) + E_B. The symbol b is
computed by evaluation/interpolation at roots of unity, the correction E_B
by fixed-point iteration, doubling, or a finite k x k truncation.
"""

__version__ = "1.0.0"

from qtsqrt.config import DEFAULT_SETTINGS, SolverSettings
from qtsqrt.engine import SolveBundle, SquareRootEngine
from qtsqrt.exceptions import (
    BreakdownError,
    ConvergenceError,
    HypothesisError,
    InterpolationError,
    QtSqrtError,
)
from qtsqrt.models import CorrectionBlock, InstanceProfile, LaurentSymbol, QtMatrix

__all__ = [
    "BreakdownError",
    "ConvergenceError",
    "CorrectionBlock",
    "DEFAULT_SETTINGS",
    "HypothesisError",
    "InstanceProfile",
    "InterpolationError",
    "LaurentSymbol",
    "QtMatrix",
    "QtSqrtError",
    "SolveBundle",
    "SolverSettings",
    "SquareRootEngine",
    "__version__",
]
