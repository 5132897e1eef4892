"""CSV emission / parsing and the fixed-width error table."""
from __future__ import annotations
import csv
import io
from pathlib import Path
from typing import List, Optional
from ..common.exceptions import ReportIOError
from .schemas import ErrorReport, ErrorRow

CSV_FIELDS = ["t", "M", "tau", "k", "h1_error", "h1_order", "superclose", "superclose_order",
              "postprocessed", "post_order"]

def _num(v: Optional[float]) -> str:
    # 17 significant digits: scientific and exactly re-parseable
    return "" if v is None else f"{v:.16e}"

def _cell(field: str, v) -> str:
    return str(v) if field == "M" else _num(v)

def render_csv(report: ErrorReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for row in report.sorted_rows():
        w.writerow([_cell(f, getattr(row, f)) for f in CSV_FIELDS])
    return buf.getvalue()

def emit_csv(report: ErrorReport, path: str | Path) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as f:
            f.write(render_csv(report))
    except OSError as e:
        raise ReportIOError(f"cannot write CSV ({e.strerror or e})", str(path)) from e
    return path

def read_csv(path: str | Path) -> List[ErrorRow]:
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
    except OSError as e:
        raise ReportIOError(f"cannot read CSV ({e.strerror or e})", str(path)) from e
    return [ErrorRow(**{k: (None if v == "" else v) for k, v in r.items()}) for r in rows]

def _fmt(v: Optional[float], spec: str) -> str:
    return "-" if v is None else format(v, spec)

def format_table(report: ErrorReport) -> str:
    """One block per snapshot time: errors and orders side by side."""
    rows = report.sorted_rows()
    out = []
    for t in sorted({r.t for r in rows}):
        block = [r for r in rows if r.t == t]
        if report.study == "stability":
            out.append(f"t = {t:g}, M = {block[0].M}, tau = k h")
            out.append(f"{'k':>6} {'tau':>10} {'|u-U|_1':>12}")
            out += [f"{r.k:>6g} {r.tau:>10.4e} {r.h1_error:>12.4e}" for r in block]
        else:
            out.append(f"t = {t:g}")
            out.append(f"{'M x M':>9} {'|u-U|_1':>11} {'Order':>7} {'|U-I_h u|_1':>11} {'Order':>7} "
                       f"{'|u-I2h U|_1':>11} {'Order':>7}")
            for r in block:
                out.append(f"{f'{r.M}x{r.M}':>9} {r.h1_error:>11.4e} {_fmt(r.h1_order, '.4f'):>7} "
                           f"{r.superclose:>11.4e} {_fmt(r.superclose_order, '.4f'):>7} "
                           f"{_fmt(r.postprocessed, '.4e'):>11} {_fmt(r.post_order, '.4f'):>7}")
        out.append("")
    return "\n".join(out)
