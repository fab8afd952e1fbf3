"""Command-line front end: gen, sqrt, bench, figdata.

Exit codes: 0 success, 1 a run finished above its residual tolerance,
2 bad input or solver failure. bench keeps going past a failed solve and
records it as a failed row; any failure makes its exit code 2.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from qtsqrt import __version__
from qtsqrt.config import DEFAULT_SETTINGS, SolverSettings
from qtsqrt.engine import SquareRootEngine, build_instance
from qtsqrt.exceptions import QtSqrtError
from qtsqrt.input_layer import load_qt_matrix
from qtsqrt.models.profile import InstanceSpec
from qtsqrt.models.results import InstanceFamily, SolveMethod
from qtsqrt.report import (
    bench_row,
    dump_finite_equation,
    emit_figure_data,
    failure_row,
    generate_run_summary,
    instance_payload,
    root_payload,
    write_json,
    write_report,
    write_table,
)

log = logging.getLogger("qtsqrt")

EXIT_OK, EXIT_RESIDUAL, EXIT_ERROR = 0, 1, 2

GENERATED = [f for f in InstanceFamily if f is not InstanceFamily.FILE]
QT_METHODS = [SolveMethod.FPI, SolveMethod.SDA]
TRUNCATED_METHODS = (SolveMethod.TRUNCATED_FPI, SolveMethod.TRUNCATED_SDA)

# name, family, parameters, methods
BENCH_SUITES: dict[str, list[tuple[str, InstanceFamily, dict, list[SolveMethod]]]] = {
    "tables": [
        ("ex1-test1", InstanceFamily.EXAMPLE1, {"band_neg": 32, "band_pos": 30}, QT_METHODS),
        (
            "ex1-test2",
            InstanceFamily.EXAMPLE1,
            {"band_neg": 32, "band_pos": 30, "corr_dim": 1000},
            QT_METHODS,
        ),
        *[
            (
                f"ex2-test{i}",
                InstanceFamily.EXAMPLE2,
                {"s0": s0, "m": 100, "n": n, "p": p, "q": 100},
                [*QT_METHODS, SolveMethod.BINOMIAL],
            )
            for i, (s0, n, p) in enumerate([(0.1, 1000, 1), (0.5, 1500, 2), (0.9, 2000, 2)], 1)
        ],
        *[
            (
                f"ex3-p{p}-q{q}",
                InstanceFamily.EXAMPLE3,
                {"p": p, "q": q},
                [*QT_METHODS, SolveMethod.TRUNCATED_FPI, SolveMethod.TRUNCATED_SDA],
            )
            for p, q in [(4, 2), (12, 10), (20, 2), (20, 20)]
        ],
    ],
    "smoke": [
        ("ex1-small", InstanceFamily.EXAMPLE1, {"band_neg": 4, "band_pos": 3}, QT_METHODS),
        (
            "ex1-corr",
            InstanceFamily.EXAMPLE1,
            {"band_neg": 4, "band_pos": 3, "corr_dim": 8},
            [*QT_METHODS, SolveMethod.SDA_REFINE],
        ),
        (
            "ex2-small",
            InstanceFamily.EXAMPLE2,
            {"s0": 0.5, "m": 10, "n": 20, "p": 2, "q": 10},
            [*QT_METHODS, SolveMethod.BINOMIAL],
        ),
        (
            "ex3-p4-q2",
            InstanceFamily.EXAMPLE3,
            {"p": 4, "q": 2},
            [*QT_METHODS, SolveMethod.TRUNCATED_FPI, SolveMethod.TRUNCATED_SDA],
        ),
    ],
}


def _settings(args: argparse.Namespace) -> SolverSettings:
    return DEFAULT_SETTINGS.replace(
        threshold=getattr(args, "threshold", None),
        tol=getattr(args, "tol", None),
        eps=getattr(args, "eps", None),
        max_iter=getattr(args, "max_iter", None),
    )


def _family_parameters(args: argparse.Namespace) -> dict:
    family = InstanceFamily(args.family)
    if family is InstanceFamily.EXAMPLE1:
        names = ("band_neg", "band_pos", "corr_dim")
    elif family is InstanceFamily.EXAMPLE2:
        names = ("s0", "m", "n", "p", "q", "row_mass")
    else:
        names = ("p", "q")
    return {n: getattr(args, n) for n in names if getattr(args, n) is not None}


def run(
    spec: InstanceSpec,
    method: SolveMethod | str,
    out: str | Path | None = None,
    report: str | Path | None = None,
    summary: str | Path | None = None,
    settings: SolverSettings = DEFAULT_SETTINGS,
    k: int | None = None,
    dump_equation: str | Path | None = None,
) -> int:
    """Solve one instance and write its outputs; returns the exit code."""
    method = SolveMethod(method)
    if dump_equation and method not in TRUNCATED_METHODS:
        raise ValueError(f"--dump-equation needs a truncated method, got {method.value}")
    bundle = SquareRootEngine(settings).run(spec, method, k)
    if dump_equation:
        manifest = dump_finite_equation(bundle.equation, dump_equation)
        log.info("finite equation (k=%d) written to %s", bundle.k, manifest)
    if out:
        write_json(out, root_payload(bundle))
    if report:
        write_report(report, bundle.report)
    if summary:
        Path(summary).write_text(generate_run_summary(bundle))
    log.info(
        "%s: %d iterations, residual %.3e",
        bundle.method.value,
        bundle.report.iterations,
        bundle.residual,
    )
    return EXIT_OK if bundle.residual <= spec.tol else EXIT_RESIDUAL


def cmd_gen(args: argparse.Namespace) -> int:
    spec = InstanceSpec(
        family=InstanceFamily(args.family),
        seed=args.seed,
        parameters=_family_parameters(args),
        threshold=args.threshold,
    )
    A, gamma = build_instance(spec)
    payload = instance_payload(
        A, gamma, family=spec.family.value, seed=spec.seed, parameters=spec.parameters
    )
    write_json(args.out, payload)
    log.info("wrote %s instance to %s", spec.family.value, args.out)
    return EXIT_OK


def cmd_sqrt(args: argparse.Namespace) -> int:
    settings = _settings(args)
    spec = InstanceSpec(
        family=InstanceFamily.FILE,
        path=args.input,
        threshold=settings.threshold,
        tol=settings.tol,
    )
    return run(
        spec,
        args.method,
        args.out,
        args.report,
        args.summary,
        settings,
        args.k,
        args.dump_equation,
    )


def cmd_bench(args: argparse.Namespace) -> int:
    settings = _settings(args)
    out_dir = Path(args.out_dir)
    rows, code = [], EXIT_OK
    engine = SquareRootEngine(settings)
    for name, family, params, methods in BENCH_SUITES[args.suite]:
        spec = InstanceSpec(
            family=family,
            seed=args.seed,
            parameters=params,
            threshold=settings.threshold,
            tol=settings.tol,
        )
        profile = engine.profile(spec)
        for method in methods:
            log.info("bench %s / %s", name, method.value)
            try:
                bundle = engine.solve(profile, method)
            except QtSqrtError as exc:
                log.error("bench %s / %s failed: %s", name, method.value, exc)
                rows.append(failure_row(args.suite, name, method, exc))
                code = EXIT_ERROR
                continue
            write_report(out_dir / f"{name}_{method.value}.json", bundle.report)
            rows.append(bench_row(args.suite, name, bundle))
            if bundle.residual > settings.tol:
                code = max(code, EXIT_RESIDUAL)
    path = write_table(out_dir / f"{args.suite}.csv", rows)
    log.info("bench table written to %s", path)
    return code


def cmd_figdata(args: argparse.Namespace) -> int:
    root = load_qt_matrix(args.input)
    for path in emit_figure_data(root, args.out_prefix):
        print(path)
    return EXIT_OK


def _add_numerics(p: argparse.ArgumentParser) -> None:
    d = DEFAULT_SETTINGS
    p.add_argument("--tol", type=float, default=d.tol, help="Relative residual stopping tolerance")
    p.add_argument("--threshold", type=float, default=d.threshold, help="Compression threshold")
    p.add_argument("--eps", type=float, default=d.eps, help="Symbol square root tolerance")
    p.add_argument("--max-iter", type=int, default=d.max_iter, help="Iteration budget per solve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtsqrt",
        description="Square roots of semi-infinite quasi-Toeplitz M-matrices",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only")
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", help="Generate a benchmark instance")
    gen.add_argument("--family", choices=[f.value for f in GENERATED], required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--band-neg", dest="band_neg", type=int, help="example1: length of s_n")
    gen.add_argument("--band-pos", dest="band_pos", type=int, help="example1: length of s_p")
    gen.add_argument("--corr-dim", dest="corr_dim", type=int, help="example1: correction size")
    gen.add_argument("--s0", type=float, help="example2: Toeplitz diagonal")
    gen.add_argument("--m", type=int, help="example2: zero block size")
    gen.add_argument("--n", type=int, help="example2: -s0 I block size")
    gen.add_argument("--p", type=int, help="example2: U rows; example3: length of s_p")
    gen.add_argument("--q", type=int, help="example2: V block size; example3: length of s_n")
    gen.add_argument("--row-mass", dest="row_mass", type=float, help="example2: upper row sum of U")
    gen.add_argument("--threshold", type=float, default=DEFAULT_SETTINGS.threshold)
    gen.add_argument("--out", required=True, help="Instance JSON path")
    gen.set_defaults(handler=cmd_gen)

    sq = subparsers.add_parser("sqrt", help="Compute the square root of an instance")
    sq.add_argument("--input", required=True, help="Instance JSON path")
    sq.add_argument("--method", choices=[m.value for m in SolveMethod], default="sda")
    sq.add_argument("--k", type=int, help="Truncation size (truncated methods)")
    sq.add_argument("--out", help="Root JSON path")
    sq.add_argument("--report", help="SolveReport JSON path")
    sq.add_argument("--summary", help="Text summary path")
    sq.add_argument(
        "--dump-equation",
        dest="dump_equation",
        help="Directory for the k x k equation blocks (truncated methods)",
    )
    _add_numerics(sq)
    sq.set_defaults(handler=cmd_sqrt)

    bench = subparsers.add_parser("bench", help="Run a benchmark suite")
    bench.add_argument("--suite", choices=sorted(BENCH_SUITES), default="smoke")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--out-dir", dest="out_dir", default="results")
    _add_numerics(bench)
    bench.set_defaults(handler=cmd_bench)

    fig = subparsers.add_parser("figdata", help="Emit coefficient and correction CSVs")
    fig.add_argument("--input", required=True, help="Root JSON path")
    fig.add_argument("--out-prefix", dest="out_prefix", required=True)
    fig.set_defaults(handler=cmd_figdata)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except (QtSqrtError, ValueError, FileNotFoundError) as exc:
        print(f"qtsqrt {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
