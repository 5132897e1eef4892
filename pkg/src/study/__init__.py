"""Convergence and stability studies, CSV emission and the command-line entry point."""
from .schemas import StudyConfig, ErrorRow, ErrorReport
from .runner import run_convergence_study, run_stability_study, run_study, plan_time_step
from .report import emit_csv, read_csv, format_table, CSV_FIELDS

__all__ = [
    "StudyConfig", "ErrorRow", "ErrorReport",
    "run_convergence_study", "run_stability_study", "run_study", "plan_time_step",
    "emit_csv", "read_csv", "format_table", "CSV_FIELDS",
]
