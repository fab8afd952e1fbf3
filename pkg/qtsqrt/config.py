"""Run-wide numerical settings."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class SolverSettings:
    """Defaults for compression, stopping and iteration budgets.

    threshold is the internal precision applied after every QT operation,
    tol the relative residual at which correction solvers stop, eps the
    tolerance of the symbol square root.
    """

    threshold: float = 1e-15
    tol: float = 1e-13
    eps: float = 1e-13
    n_max: int = 2**20
    max_iter: int = 500
    neumann_max_terms: int = 4096
    neumann_margin: float = 1e-8
    verify_constant: float = 10.0  # c in the extension inequalities
    rank_tol: float = 1e-12

    def replace(self, **overrides) -> SolverSettings:
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULT_SETTINGS = SolverSettings()
