"""Plain-text run summary."""

from __future__ import annotations

from io import StringIO

from qtsqrt.engine import SolveBundle


def generate_run_summary(bundle: SolveBundle, title: str = "qtsqrt Run Summary") -> str:
    """Text summary of one solve, suitable for saving next to the JSON outputs."""
    out = StringIO()
    m = bundle.profile.metadata
    r = bundle.report
    out.write(f"{title}\n")
    out.write("=" * 60 + "\n\n")
    out.write("1. Instance\n")
    out.write(f"   gamma: {m.gamma:.6g}\n")
    out.write(f"   ||A1||_inf: {m.a1_norm_inf:.6g}, min entry: {m.a1_min_entry:.3e}\n")
    out.write(f"   Toeplitz band: {m.band}, correction: {m.correction_rows}x{m.correction_cols}\n")
    for v in bundle.profile.violations:
        out.write(f"   - {v}\n")
    out.write("\n2. Symbol square root\n")
    if bundle.symbol is None:
        out.write("   not computed (binomial iteration works on the whole matrix)\n")
    else:
        s = bundle.symbol
        out.write(f"   n: {s.n_final} ({s.doublings} doublings), delta_m: {s.delta_m:.3e}\n")
        out.write(f"   b(1): {s.b1:.15g}, b'(1): {s.bp1:.6g}, b''(1): {s.bpp1:.6g}\n")
        out.write(f"   coefficients: {s.bhat.q} negative, {s.bhat.p} positive\n")
    out.write(f"\n3. Correction ({r.method.value})\n")
    out.write(f"   Iterations: {r.iterations}\n")
    out.write(f"   Final residual: {r.final_residual:.3e}\n")
    out.write(f"   Wall time: {r.wall_time:.3f}s\n")
    if r.stats:
        st = r.stats
        out.write(f"   Band {st.band}, rows {st.rows}, cols {st.cols}, rank {st.rank}\n")
    out.write("\n4. Acceptance\n")
    out.write(f"   ||(I - T(b) - X)^2 - A|| / ||A||: {bundle.residual:.3e}\n")
    if bundle.diagnostics is not None:
        d = bundle.diagnostics
        out.write(f"\n5. Extension from k = {bundle.k}\n")
        out.write(f"   ||G T12||: {d.g_t12:.3e}\n")
        out.write(f"   ||T21 G||: {d.t21_g:.3e}\n")
        out.write(f"   max ||W12||, ||W21||, ||W22||: {d.w_offdiag:.3e}\n")
        out.write(f"   limit c*eps: {d.threshold:.3e}, passed: {bundle.extension_ok}\n")
    out.write("\n--- End of Run Summary ---\n")
    return out.getvalue()
