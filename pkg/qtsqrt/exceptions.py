"""Exception hierarchy shared by every layer."""

from __future__ import annotations


class QtSqrtError(Exception):
    """Base class for all qtsqrt failures."""


class HypothesisError(QtSqrtError, ValueError):
    """An input violates a precondition of the requested operation."""


class InterpolationError(QtSqrtError):
    """FFT interpolation left an imaginary residue above tolerance."""

    def __init__(self, message: str, residue: float) -> None:
        super().__init__(message)
        self.residue = residue


class BreakdownError(QtSqrtError):
    """An iteration cannot continue (series divergence, singular factor)."""

    def __init__(self, message: str, norm: float | None = None) -> None:
        super().__init__(message)
        self.norm = norm


class ConvergenceError(QtSqrtError):
    """Iteration budget exhausted before the stopping rule was met."""

    def __init__(self, message: str, iterations: int, residual: float | None = None) -> None:
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual
