"""Input Layer: loading, generation and profiling of instances."""

from qtsqrt.input_layer.generators import gen_example1, gen_example2, gen_example3
from qtsqrt.input_layer.loaders import load_dense, load_instance, load_qt_matrix
from qtsqrt.input_layer.profiler import create_profile, require_hypotheses

__all__ = [
    "create_profile",
    "gen_example1",
    "gen_example2",
    "gen_example3",
    "load_dense",
    "load_instance",
    "load_qt_matrix",
    "require_hypotheses",
]
