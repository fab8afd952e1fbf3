"""Structured arithmetic on semi-infinite quasi-Toeplitz matrices."""

from qtsqrt.qtcore.arithmetic import (
    qt_add,
    qt_block_norm_inf,
    qt_compress,
    qt_from_correction,
    qt_identity,
    qt_min_entry,
    qt_mul,
    qt_norm_inf,
    qt_scale,
    qt_sub,
    qt_toeplitz,
    qt_zero,
)
from qtsqrt.qtcore.dense import (
    dense_norm_inf,
    dense_sqrt_oracle,
    qt_dense_window,
    qt_truncate_dense,
    toeplitz_block,
    toeplitz_window,
)
from qtsqrt.qtcore.neumann import qt_neumann_inverse, qt_neumann_inverse_shifted
from qtsqrt.qtcore.stats import correction_stats, numerical_rank

__all__ = [
    "correction_stats",
    "dense_norm_inf",
    "dense_sqrt_oracle",
    "numerical_rank",
    "qt_add",
    "qt_block_norm_inf",
    "qt_compress",
    "qt_dense_window",
    "qt_from_correction",
    "qt_identity",
    "qt_min_entry",
    "qt_mul",
    "qt_neumann_inverse",
    "qt_neumann_inverse_shifted",
    "qt_norm_inf",
    "qt_scale",
    "qt_sub",
    "qt_toeplitz",
    "qt_truncate_dense",
    "qt_zero",
    "toeplitz_block",
    "toeplitz_window",
]
