"""Report: run summaries and file outputs."""

from qtsqrt.report.generator import generate_run_summary
from qtsqrt.report.writers import (
    bench_row,
    dump_finite_equation,
    emit_figure_data,
    failure_row,
    instance_payload,
    root_payload,
    write_dense,
    write_json,
    write_report,
    write_table,
)

__all__ = [
    "bench_row",
    "dump_finite_equation",
    "emit_figure_data",
    "failure_row",
    "generate_run_summary",
    "instance_payload",
    "root_payload",
    "write_dense",
    "write_json",
    "write_report",
    "write_table",
]
