"""
Run a convergence or stability study and write its error table as CSV.

Usage:
  python -m src.study.cli --problem example1 --sizes 10,20,40,80 --tau-rule h \
      --snapshots 0.25,0.5,0.75,1.0 --out data/results/table1_4.csv
  python -m src.study.cli --config config/table5.conf

Exit codes: 0 success, 2 config error, 3 solver failure, 4 I/O error.
Progress goes to stderr; the table goes to stdout and the CSV to --out.
"""
from __future__ import annotations
import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional
from pydantic import ValidationError
from ..common.config import SETTINGS
from ..common.constants import EXIT_CONFIG, EXIT_IO, EXIT_OK, EXIT_SOLVER, RESULTS_DIR
from ..common.exceptions import (
    ConfigError, InvalidArgumentError, ReportIOError, SolverFailureError, UnsupportedError, UnsupportedMeshError,
)
from ..common.logging import get_logger
from ..common.progress import log_progress
from ..obs.manifest import file_sha256, write_manifest
from .config_file import load_config_file, split_list
from .report import emit_csv, format_table
from .runner import run_study
from .schemas import StudyConfig

log = get_logger("study/cli")

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(description="Linearized Crank-Nicolson Galerkin FEM convergence studies")
    ap.add_argument("--config", help="flat key = value config file; flags override it")
    ap.add_argument("--study", choices=["convergence", "stability"])
    ap.add_argument("--problem")
    ap.add_argument("--sizes", type=split_list, help="comma-separated mesh sizes M, e.g. 10,20,40,80")
    ap.add_argument("--tau-rule", choices=["h", "kh"])
    ap.add_argument("--elements-per-axis", choices=["M", "M/2"],
                    help="elements per axis for size M; tau is planned from 1/M either way")
    ap.add_argument("--k", type=split_list, help="tau = k h; a list for the stability study")
    ap.add_argument("--t-final", type=float)
    ap.add_argument("--snapshots", type=split_list, help="comma-separated output times")
    ap.add_argument("--out", help="CSV output path")
    ap.add_argument("--solver-tol", type=float)
    ap.add_argument("--quad", type=int, help="Gauss points per axis")
    ap.add_argument("--solver", choices=["direct", "bicgstab"])
    ap.add_argument("--source-rule", choices=["midpoint", "average"])
    ap.add_argument("--workers", type=int)
    ap.add_argument("--no-postprocess", dest="postprocess", action="store_const", const=False)
    return ap

def resolve_config(args: argparse.Namespace) -> StudyConfig:
    """Settings defaults < config file < command-line flags."""
    values: Dict[str, Any] = load_config_file(args.config) if args.config else {}
    for key, val in vars(args).items():
        if key != "config" and val is not None:
            values[key] = val
    try:
        return StudyConfig(**values)
    except ValidationError as e:
        raise ConfigError(f"invalid study config: {e}") from e

def default_out(config: StudyConfig) -> str:
    return f"{RESULTS_DIR}/{config.study}_{config.problem}.csv"

def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    task = "STUDY"
    try:
        config = resolve_config(args)
        out = config.out or default_out(config)
        log_progress(task, "START", f"{config.study} problem={config.problem} sizes={config.sizes}")
        report = run_study(config)
        path = emit_csv(report, out)
        digest = file_sha256(path)
        manifest = write_manifest(config.study, {
            "config": config.model_dump(),
            "csv": str(path),
            "csv_sha256": digest,
            "rows": len(report.rows),
        }) if SETTINGS.MANIFEST_ENABLE else None
    except (ConfigError, InvalidArgumentError, UnsupportedError, UnsupportedMeshError) as e:
        log.error(f"config error: {e}")
        log_progress(task, "FAILED", f"config: {e}")
        return EXIT_CONFIG
    except SolverFailureError as e:
        log.error(f"solver failure: {e}")
        log_progress(task, "FAILED", f"solver: {e}")
        return EXIT_SOLVER
    except (ReportIOError, OSError) as e:
        log.error(f"I/O error: {e}")
        log_progress(task, "FAILED", f"io: {e}")
        return EXIT_IO

    print(format_table(report))
    if manifest:
        log.info(f"manifest: {manifest}")
    log.info(f"wrote {len(report.rows)} rows to {path} (sha256 {digest[:12]})")
    log_progress(task, "END", f"rows={len(report.rows)} csv={path}")
    return EXIT_OK

if __name__ == "__main__":
    sys.exit(main())
