"""JSON and CSV outputs: roots, reports, bench tables, figure data."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from qtsqrt.engine import SolveBundle
from qtsqrt.models.qt import DenseMatrix, QtMatrix
from qtsqrt.models.results import FiniteEquation, SolveMethod, SolveReport

log = logging.getLogger(__name__)

BENCH_COLUMNS = [
    "suite",
    "instance",
    "method",
    "iterations",
    "final_residual",
    "residual",
    "wall_time_s",
    "band",
    "rows",
    "cols",
    "rank",
    "status",
    "message",
]


def write_json(path: str | Path, payload: dict[str, Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2))
    log.debug("wrote %s", path)
    return path


def instance_payload(A: QtMatrix, gamma: float = 1.0, **extra: Any) -> dict[str, Any]:
    return {"matrix": A.to_dict(), "gamma": gamma, **extra}


def root_payload(bundle: SolveBundle) -> dict[str, Any]:
    """B under "matrix" (so it loads back as a QT matrix) plus sqrt(A)."""
    payload: dict[str, Any] = {
        "matrix": bundle.B.to_dict(),
        "gamma": bundle.profile.metadata.gamma,
        "sqrt": bundle.sqrt_matrix.to_dict(),
        "method": bundle.method.value,
        "residual": bundle.residual,
    }
    if bundle.symbol is not None:
        payload["symbol_sqrt"] = {
            "n": bundle.symbol.n_final,
            "delta_m": bundle.symbol.delta_m,
            "b1": bundle.symbol.b1,
        }
    if bundle.k is not None:
        payload["k"] = bundle.k
    return payload


def write_report(path: str | Path, report: SolveReport) -> Path:
    return write_json(path, report.to_dict())


def bench_row(suite: str, instance: str, bundle: SolveBundle) -> dict[str, Any]:
    r = bundle.report
    stats = r.stats.to_dict() if r.stats else dict.fromkeys(("band", "rows", "cols", "rank"))
    return {
        "suite": suite,
        "instance": instance,
        "method": r.method.value,
        "iterations": r.iterations,
        "final_residual": r.final_residual,
        "residual": bundle.residual,
        "wall_time_s": r.wall_time,
        **stats,
        "status": "ok",
        "message": "",
    }


def failure_row(
    suite: str, instance: str, method: SolveMethod, exc: Exception
) -> dict[str, Any]:
    """Bench row for a solve that raised; iterations and residual when the error carries them."""
    return {
        "suite": suite,
        "instance": instance,
        "method": method.value,
        "iterations": getattr(exc, "iterations", None),
        "final_residual": getattr(exc, "residual", None),
        "status": "failed",
        "message": f"{type(exc).__name__}: {exc}",
    }


def write_table(path: str | Path, rows: list[dict[str, Any]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(rows, columns=BENCH_COLUMNS).to_csv(path, index=False)
    return path


def write_dense(path: str | Path, M: DenseMatrix) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(M).to_csv(path, header=False, index=False, float_format="%.17g")
    return path


def dump_finite_equation(eq: FiniteEquation, out_dir: str | Path) -> Path:
    """T11, A11, TT, W11 as CSV plus a manifest carrying k."""
    out_dir = Path(out_dir)
    blocks = {"T11": eq.T11, "A11": eq.A11, "TT": eq.TT, "W11": eq.W11}
    files = {name: write_dense(out_dir / f"{name}.csv", M).name for name, M in blocks.items()}
    return write_json(out_dir / "manifest.json", {"k": eq.k, "blocks": files})


def _log_abs(values: np.ndarray) -> np.ndarray:
    return np.log10(np.abs(values))


def emit_figure_data(root: QtMatrix, prefix: str | Path) -> list[Path]:
    """Coefficient and correction magnitudes on a log10 scale.

    <prefix>_symbol_neg.csv / _symbol_pos.csv: (index, log10_abs) for i <= 0
    and i >= 0; <prefix>_correction.csv: 1-based (i, j, log10_abs) of the
    nonzero correction entries.
    """
    prefix = Path(prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    b = root.symbol
    neg_idx = -np.arange(b.q + 1)
    pos_idx = np.arange(b.p + 1)
    paths = []
    for name, idx in (("neg", neg_idx), ("pos", pos_idx)):
        coeffs = b.coefficients_at(idx)
        keep = coeffs != 0
        df = pd.DataFrame({"index": idx[keep], "log10_abs": _log_abs(coeffs[keep])})
        path = prefix.with_name(f"{prefix.name}_symbol_{name}.csv")
        df.to_csv(path, index=False)
        paths.append(path)

    E = root.correction.data
    rows, cols = np.nonzero(E)
    df = pd.DataFrame({"i": rows + 1, "j": cols + 1, "log10_abs": _log_abs(E[rows, cols])})
    path = prefix.with_name(f"{prefix.name}_correction.csv")
    df.to_csv(path, index=False)
    paths.append(path)
    log.info("figure data written with prefix %s", prefix)
    return paths
