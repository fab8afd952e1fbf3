"""
Square-root engine: instance -> symbol square root -> correction -> checks.

Runs any solve method end to end on a profiled instance and bundles every
intermediate result the reports need.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from qtsqrt.config import DEFAULT_SETTINGS, SolverSettings
from qtsqrt.exceptions import HypothesisError
from qtsqrt.input_layer import (
    create_profile,
    gen_example1,
    gen_example2,
    gen_example3,
    load_instance,
    require_hypotheses,
)
from qtsqrt.models.profile import InstanceProfile, InstanceSpec
from qtsqrt.models.qt import CorrectionBlock, QtMatrix
from qtsqrt.models.results import (
    ExtensionDiagnostics,
    FiniteEquation,
    InstanceFamily,
    SolveMethod,
    SolveReport,
    SymbolSqrtResult,
)
from qtsqrt.models.symbol import LaurentSymbol
from qtsqrt.qtcore import correction_stats, qt_compress, qt_identity, qt_toeplitz
from qtsqrt.solvers import (
    binomial_sqrt,
    fpi_correction,
    residual,
    sda_correction,
    sda_refine,
    substochastic_completion,
)
from qtsqrt.symbolsqrt import sqrt_symbol
from qtsqrt.truncated import (
    build_finite_equation,
    extend_to_infinity,
    solve_finite_fpi,
    solve_finite_sda,
    suggest_k,
    verify_extension,
)

log = logging.getLogger(__name__)


@dataclass
class SolveBundle:
    """All outputs of one solve of (I - B)^2 = I - A1, A = gamma (I - A1)."""

    profile: InstanceProfile
    method: SolveMethod
    B: QtMatrix  # T(bhat) + correction
    Tb: QtMatrix
    correction: QtMatrix
    report: SolveReport
    residual: float  # full QT residual of B, all methods alike
    symbol: SymbolSqrtResult | None = None  # None for the binomial iteration
    k: int | None = None
    diagnostics: ExtensionDiagnostics | None = None
    extension_ok: bool | None = None
    equation: FiniteEquation | None = None  # truncated path only

    @property
    def sqrt_matrix(self) -> QtMatrix:
        """sqrt(gamma) (I - B), the principal square root of A."""
        gamma = self.profile.metadata.gamma
        return math.sqrt(gamma) * (qt_identity(self.B.threshold) - self.B)


def build_instance(spec: InstanceSpec) -> tuple[QtMatrix, float]:
    """(A, gamma) for an InstanceSpec."""
    params = dict(spec.parameters)
    family = InstanceFamily(spec.family)
    if family is InstanceFamily.EXAMPLE1:
        A = gen_example1(
            spec.seed,
            int(params.get("band_neg", 32)),
            int(params.get("band_pos", 30)),
            int(params.get("corr_dim", 0)),
            threshold=spec.threshold,
        )
        return A, 1.0
    if family is InstanceFamily.EXAMPLE2:
        A = gen_example2(
            float(params.get("s0", 0.5)),
            int(params.get("m", 100)),
            int(params.get("n", 1500)),
            int(params.get("p", 2)),
            int(params.get("q", 100)),
            seed=spec.seed,
            row_mass=float(params.get("row_mass", 0.9)),
            threshold=spec.threshold,
        )
        return A, 1.0
    if family is InstanceFamily.EXAMPLE3:
        return gen_example3(
            spec.seed, int(params.get("p", 4)), int(params.get("q", 2)), threshold=spec.threshold
        )
    if not spec.path:
        raise HypothesisError("family 'file' needs a path")
    A, gamma = load_instance(spec.path)
    return A.with_threshold(spec.threshold), gamma


class SquareRootEngine:
    """
    Orchestrates a full solve: profile -> symbol square root -> correction
    solver -> residual (and extension checks for the truncated path).
    """

    def __init__(self, settings: SolverSettings = DEFAULT_SETTINGS) -> None:
        self.settings = settings

    def profile(self, spec: InstanceSpec) -> InstanceProfile:
        A, gamma = build_instance(spec)
        profile = create_profile(A, gamma)
        require_hypotheses(profile)
        return profile

    def symbol_root(self, profile: InstanceProfile) -> SymbolSqrtResult:
        s = self.settings
        return sqrt_symbol(profile.A.symbol, profile.metadata.gamma, s.eps, s.n_max)

    def solve(
        self,
        profile: InstanceProfile,
        method: SolveMethod | str,
        k: int | None = None,
    ) -> SolveBundle:
        method = SolveMethod(method)
        s = self.settings
        A1 = profile.A1.with_threshold(s.threshold)
        normalized = qt_identity(s.threshold) - A1

        if method is SolveMethod.BINOMIAL:
            B, report = binomial_sqrt(A1, s.tol, s.max_iter, s.rank_tol)
            Tb = qt_toeplitz(B.symbol, s.threshold)
            X = QtMatrix(LaurentSymbol.zero(), CorrectionBlock(B.correction.data), s.threshold)
            return SolveBundle(
                profile=profile,
                method=method,
                B=B,
                Tb=Tb,
                correction=X,
                report=report,
                residual=residual(normalized, Tb, X),
            )

        symbol = self.symbol_root(profile)
        Tb = qt_compress(qt_toeplitz(symbol.bhat), s.threshold)
        bundle_extras: dict = {}
        if method is SolveMethod.FPI:
            X, report = fpi_correction(
                A1, Tb, s.tol, s.max_iter, s.neumann_max_terms, s.rank_tol
            )
        elif method is SolveMethod.SDA:
            X, report = sda_correction(
                A1, Tb, s.tol, s.max_iter, s.neumann_max_terms, s.neumann_margin, s.rank_tol
            )
        elif method is SolveMethod.SDA_REFINE:
            Einit = substochastic_completion(Tb.symbol, s.threshold)
            X, report = sda_refine(
                A1, Tb, Einit, s.tol, s.max_iter, s.neumann_max_terms, s.neumann_margin, s.rank_tol
            )
        else:
            X, report, bundle_extras = self._solve_truncated(method, A1, Tb, normalized, k)

        return SolveBundle(
            profile=profile,
            method=method,
            B=Tb + X,
            Tb=Tb,
            correction=X,
            report=report,
            residual=residual(normalized, Tb, X),
            symbol=symbol,
            **bundle_extras,
        )

    def _solve_truncated(
        self,
        method: SolveMethod,
        A1: QtMatrix,
        Tb: QtMatrix,
        normalized: QtMatrix,
        k: int | None,
    ) -> tuple[QtMatrix, SolveReport, dict]:
        s = self.settings
        b = Tb.symbol
        k = k or suggest_k(A1, b)
        log.info("truncated path with k=%d", k)
        eq = build_finite_equation(A1, b, k)
        solver = solve_finite_fpi if method is SolveMethod.TRUNCATED_FPI else solve_finite_sda
        G, report = solver(eq, s.tol, s.max_iter)
        X = extend_to_infinity(G, s.threshold)
        ok, diagnostics = verify_extension(normalized, Tb, G, s.eps, s.verify_constant)
        report.stats = correction_stats(X, s.rank_tol)
        return X, report, {
            "k": k,
            "diagnostics": diagnostics,
            "extension_ok": ok,
            "equation": eq,
        }

    def run(
        self, spec: InstanceSpec, method: SolveMethod | str, k: int | None = None
    ) -> SolveBundle:
        """Profile the instance described by spec and solve it at its threshold and tol."""
        engine = SquareRootEngine(self.settings.replace(threshold=spec.threshold, tol=spec.tol))
        return engine.solve(engine.profile(spec), method, k)

