"""Quasi-Toeplitz matrices T(a) + E and their finite dense companions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from qtsqrt.models.symbol import LaurentSymbol

# Finite real matrices (truncations, dense equation blocks, oracle roots).
DenseMatrix = np.ndarray


@dataclass(frozen=True, eq=False)
class CorrectionBlock:
    """Top-left r x c corner of an infinite matrix that is zero elsewhere."""

    data: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.data, dtype=float)
        if arr.size == 0:
            arr = np.zeros((0, 0))
        if arr.ndim != 2:
            raise ValueError(f"Correction block must be 2-D, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def empty(cls) -> CorrectionBlock:
        return cls(np.zeros((0, 0)))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def is_empty(self) -> bool:
        return self.data.size == 0

    def norm_inf(self) -> float:
        if self.is_empty:
            return 0.0
        return float(np.abs(self.data).sum(axis=1).max())

    def padded(self, rows: int, cols: int) -> np.ndarray:
        """Dense copy cropped or zero-padded to rows x cols."""
        out = np.zeros((rows, cols))
        r, c = min(rows, self.rows), min(cols, self.cols)
        out[:r, :c] = self.data[:r, :c]
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "data": [float(x) for x in self.data.reshape(-1)],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CorrectionBlock:
        rows, cols = int(data.get("rows", 0)), int(data.get("cols", 0))
        values = np.asarray(data.get("data", []), dtype=float)
        if values.size != rows * cols:
            raise ValueError(
                f"Correction declares {rows}x{cols} but carries {values.size} numbers"
            )
        return cls(values.reshape(rows, cols))


@dataclass(frozen=True, eq=False)
class QtMatrix:
    """Semi-infinite matrix with entries a_{j-i} + e_{i,j}.

    threshold is the compression tolerance applied after arithmetic that
    produces this matrix. Operators delegate to qtsqrt.qtcore.
    """

    symbol: LaurentSymbol
    correction: CorrectionBlock
    threshold: float = 0.0

    def __post_init__(self) -> None:
        if self.threshold < 0:
            raise ValueError("threshold must be nonnegative")

    @property
    def rows(self) -> int:
        return self.correction.rows

    @property
    def cols(self) -> int:
        return self.correction.cols

    def with_threshold(self, threshold: float) -> QtMatrix:
        return QtMatrix(self.symbol, self.correction, threshold)

    def __add__(self, other: QtMatrix) -> QtMatrix:
        from qtsqrt.qtcore.arithmetic import qt_add

        return qt_add(self, other)

    def __sub__(self, other: QtMatrix) -> QtMatrix:
        from qtsqrt.qtcore.arithmetic import qt_sub

        return qt_sub(self, other)

    def __neg__(self) -> QtMatrix:
        from qtsqrt.qtcore.arithmetic import qt_scale

        return qt_scale(self, -1.0)

    def __matmul__(self, other: QtMatrix) -> QtMatrix:
        from qtsqrt.qtcore.arithmetic import qt_mul

        return qt_mul(self, other)

    def __mul__(self, factor: float) -> QtMatrix:
        from qtsqrt.qtcore.arithmetic import qt_scale

        return qt_scale(self, float(factor))

    __rmul__ = __mul__

    def to_dict(self) -> dict[str, Any]:
        return {
            "symbol": self.symbol.to_dict(),
            "correction": self.correction.to_dict(),
            "threshold": self.threshold,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> QtMatrix:
        if "symbol" not in data:
            raise ValueError("QtMatrix JSON requires a 'symbol' object")
        correction = data.get("correction") or {"rows": 0, "cols": 0, "data": []}
        return cls(
            symbol=LaurentSymbol.from_dict(data["symbol"]),
            correction=CorrectionBlock.from_dict(correction),
            threshold=float(data.get("threshold", 0.0)),
        )

    def __repr__(self) -> str:
        return (
            f"QtMatrix(q={self.symbol.q}, p={self.symbol.p}, "
            f"correction={self.rows}x{self.cols}, threshold={self.threshold:g})"
        )
