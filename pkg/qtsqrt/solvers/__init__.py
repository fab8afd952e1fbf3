"""Correction-part solvers in QT arithmetic."""

from qtsqrt.solvers.binomial import binomial_sqrt
from qtsqrt.solvers.fpi import fpi_correction
from qtsqrt.solvers.residual import residual
from qtsqrt.solvers.sda import sda_correction, sda_refine, substochastic_completion

__all__ = [
    "binomial_sqrt",
    "fpi_correction",
    "residual",
    "sda_correction",
    "sda_refine",
    "substochastic_completion",
]
