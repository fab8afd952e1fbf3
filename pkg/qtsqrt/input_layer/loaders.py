"""Load QT matrices (JSON) and dense blocks (CSV) from disk."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO

import numpy as np
import pandas as pd

from qtsqrt.models.qt import DenseMatrix, QtMatrix

INSTANCE_EXTENSIONS = {".json"}
DENSE_EXTENSIONS = {".csv", ".tsv", ".txt"}


def _existing(path: str | Path) -> Path:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    return path


def _parse_instance(payload: dict, origin: str) -> tuple[QtMatrix, float]:
    if not isinstance(payload, dict):
        raise ValueError(f"{origin}: expected a JSON object, got {type(payload).__name__}")
    body = payload.get("matrix", payload)
    try:
        matrix = QtMatrix.from_dict(body)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"{origin}: malformed QT matrix ({exc})") from exc
    except ValueError as exc:
        raise ValueError(f"{origin}: {exc}") from exc
    gamma = float(payload.get("gamma", 1.0))
    if gamma <= 0:
        raise ValueError(f"{origin}: gamma must be positive, got {gamma}")
    return matrix, gamma


def load_instance(source: str | Path | TextIO) -> tuple[QtMatrix, float]:
    """Load a QT matrix and its scale gamma (1 when absent).

    Accepts either a bare QtMatrix object or {"matrix": {...}, "gamma": g}.
    """
    if hasattr(source, "read"):
        origin = getattr(source, "name", "<stream>")
        try:
            payload = json.load(source)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{origin}: invalid JSON ({exc})") from exc
        return _parse_instance(payload, origin)
    path = _existing(source)
    if path.suffix.lower() not in INSTANCE_EXTENSIONS:
        raise ValueError(
            f"Unsupported extension '{path.suffix}'. Supported: {sorted(INSTANCE_EXTENSIONS)}"
        )
    try:
        payload = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from exc
    return _parse_instance(payload, str(path))


def load_qt_matrix(source: str | Path | TextIO) -> QtMatrix:
    return load_instance(source)[0]


def load_dense(source: str | Path) -> DenseMatrix:
    """Plain rows of decimal numbers, comma-separated (tab for .tsv).

    Library entry point for reading back the blocks that
    `qtsqrt sqrt --dump-equation` writes.
    """
    path = _existing(source)
    ext = path.suffix.lower()
    if ext not in DENSE_EXTENSIONS:
        raise ValueError(f"Unsupported extension '{ext}'. Supported: {sorted(DENSE_EXTENSIONS)}")
    sep = "\t" if ext == ".tsv" else ","
    try:
        df = pd.read_csv(path, header=None, sep=sep)
    except pd.errors.EmptyDataError:
        return np.zeros((0, 0))
    values = df.apply(pd.to_numeric, errors="coerce").to_numpy(dtype=float)
    if np.isnan(values).any():
        raise ValueError(f"{path}: non-numeric entries in dense matrix")
    return values
