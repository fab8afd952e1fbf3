"""Laurent symbols a(z) = sum_j a_j z^j with finite support."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np


def _as_coeffs(values: Sequence[float] | np.ndarray) -> np.ndarray:
    arr = np.array(values, dtype=float).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise ValueError("Symbol coefficients must be finite")
    return arr


def _strip_trailing_zeros(arr: np.ndarray, keep: int = 0) -> np.ndarray:
    nz = np.flatnonzero(arr)
    end = max(int(nz[-1]) + 1 if nz.size else 0, keep)
    return arr[:end]


@dataclass(frozen=True, eq=False)
class LaurentSymbol:
    """Finitely supported element of the Wiener algebra.

    neg holds (a_-1, ..., a_-q) and pos holds (a_0, ..., a_p). a_0 lives in
    pos[0] only; exact zeros at both band edges are stripped on construction.
    """

    neg: np.ndarray
    pos: np.ndarray

    def __post_init__(self) -> None:
        neg = _strip_trailing_zeros(_as_coeffs(self.neg))
        pos = _strip_trailing_zeros(_as_coeffs(self.pos), keep=1)
        if pos.size == 0:
            pos = np.zeros(1)
        neg.setflags(write=False)
        pos.setflags(write=False)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "pos", pos)

    @classmethod
    def constant(cls, value: float) -> LaurentSymbol:
        return cls(neg=np.zeros(0), pos=np.array([value], dtype=float))

    @classmethod
    def zero(cls) -> LaurentSymbol:
        return cls.constant(0.0)

    @classmethod
    def monomial(cls, power: int, value: float = 1.0) -> LaurentSymbol:
        if power >= 0:
            pos = np.zeros(power + 1)
            pos[power] = value
            return cls(neg=np.zeros(0), pos=pos)
        neg = np.zeros(-power)
        neg[-power - 1] = value
        return cls(neg=neg, pos=np.zeros(1))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[float] | np.ndarray, offset: int) -> LaurentSymbol:
        """Build from a dense array where coeffs[i] is a_{i - offset}."""
        c = _as_coeffs(coeffs)
        if offset < 0:
            c = np.concatenate([np.zeros(-offset), c])
            offset = 0
        if offset > c.size:
            c = np.concatenate([c, np.zeros(offset - c.size)])
        neg = c[:offset][::-1]
        pos = c[offset:]
        return cls(neg=neg, pos=pos)

    @property
    def p(self) -> int:
        """Highest nonnegative index with a stored coefficient."""
        return self.pos.size - 1

    @property
    def q(self) -> int:
        """Number of stored negative-index coefficients."""
        return self.neg.size

    @property
    def band(self) -> int:
        return self.p + self.q + 1

    def coefficients(self) -> tuple[np.ndarray, int]:
        """Dense coefficients a_{-q}..a_p and the offset q of a_0."""
        return np.concatenate([self.neg[::-1], self.pos]), self.q

    def indices(self) -> np.ndarray:
        return np.arange(-self.q, self.p + 1)

    def coefficient(self, j: int) -> float:
        if j >= 0:
            return float(self.pos[j]) if j <= self.p else 0.0
        return float(self.neg[-j - 1]) if -j <= self.q else 0.0

    def coefficients_at(self, offsets: np.ndarray) -> np.ndarray:
        """Vectorised a_d for an integer array of offsets d (zero off-band)."""
        full, q = self.coefficients()
        idx = np.asarray(offsets) + q
        valid = (idx >= 0) & (idx < full.size)
        return np.where(valid, full[np.clip(idx, 0, full.size - 1)], 0.0)

    def is_zero(self) -> bool:
        return self.q == 0 and self.pos.size == 1 and self.pos[0] == 0.0

    def to_dict(self) -> dict[str, Any]:
        return {"neg": [float(x) for x in self.neg], "pos": [float(x) for x in self.pos]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LaurentSymbol:
        if "pos" not in data:
            raise ValueError("Symbol JSON requires a 'pos' array")
        return cls(neg=data.get("neg", []), pos=data["pos"])

    def __repr__(self) -> str:
        return f"LaurentSymbol(q={self.q}, p={self.p})"
