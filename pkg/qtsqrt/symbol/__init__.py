"""Laurent symbols: Wiener-algebra arithmetic and FFT evaluation/interpolation."""

from qtsqrt.symbol.arithmetic import (
    add,
    derivatives_at_one,
    evaluate,
    mul,
    scale,
    trim,
    wiener_norm,
)
from qtsqrt.symbol.fourier import (
    eval_roots_of_unity,
    interpolate,
    interpolate_with_residue,
    node_exponents,
)

__all__ = [
    "add",
    "derivatives_at_one",
    "evaluate",
    "mul",
    "scale",
    "trim",
    "wiener_norm",
    "eval_roots_of_unity",
    "interpolate",
    "interpolate_with_residue",
    "node_exponents",
]
