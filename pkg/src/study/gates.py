"""
Compare an emitted study CSV against the reference error tables.

Usage:
  python -m src.study.gates --csv data/results/convergence_example1.csv --kind convergence
  python -m src.study.gates --csv data/results/stability_example1.csv --kind stability
Exits 1 when any gate is violated.
"""
from __future__ import annotations
import argparse
import sys
from typing import Any, Dict, List, Optional
import yaml
from ..common.constants import REFERENCE_TABLES_YAML
from ..common.logging import get_logger
from .report import read_csv
from .schemas import ErrorRow

log = get_logger("study/gates")

METRICS = ("h1_error", "superclose", "postprocessed")
ORDERS = ("h1_order", "superclose_order", "post_order")

def load_reference(path: str = REFERENCE_TABLES_YAML) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)

def check_threshold(value: Optional[float], rule: Dict[str, float]) -> bool:
    if "gte" in rule: return value is not None and value >= float(rule["gte"])
    if "lte" in rule: return value is not None and value <= float(rule["lte"])
    if "eq"  in rule: return value is not None and abs(value - float(rule["eq"])) < 1e-9
    return False

def _rel(value: float, ref: float) -> float:
    return abs(value - ref) / abs(ref)

def _match_time(times: Dict[Any, Any], t: float):
    for key in times:
        if abs(float(key) - t) < 1e-12:
            return times[key]
    return None

def known_deviations(ref: Dict[str, Any]) -> Dict[str, list]:
    dev = ref.get("known_deviations") or {}
    return {"convergence": list(dev.get("convergence", [])),
            "stability_k": [float(k) for k in dev.get("stability_k", [])]}

def check_convergence(rows: List[ErrorRow], ref: Dict[str, Any]) -> List[str]:
    gates, table = ref["gates"], ref["convergence"]
    sizes = table["sizes"]
    skip = set(known_deviations(ref)["convergence"])
    failures = []
    for r in rows:
        block = _match_time(table["times"], r.t)
        if block is None or r.M not in sizes:
            continue
        i = sizes.index(r.M)
        for name in METRICS:
            val, want = getattr(r, name), block[name][i]
            if name in skip or val is None or want is None:
                continue
            if not check_threshold(_rel(val, want), gates["error_rel"]):
                failures.append(f"[t={r.t:g} M={r.M}] {name}={val:.4e} vs {want:.4e} violates {gates['error_rel']}")
        for name in ORDERS:
            val, want = getattr(r, name), block[name][i]
            if name in skip or val is None or want is None:
                continue
            if not check_threshold(abs(val - want), gates["order_abs"]):
                failures.append(f"[t={r.t:g} M={r.M}] {name}={val:.4f} vs {want:.4f} violates {gates['order_abs']}")
        if r.M == sizes[-1]:
            for name in ("superclose_order", "post_order"):
                val = getattr(r, name)
                if val is not None and not check_threshold(val, gates["superconvergence_order"]):
                    failures.append(f"[t={r.t:g} M={r.M}] {name}={val:.4f} violates {gates['superconvergence_order']}")
    return failures

def check_stability(rows: List[ErrorRow], ref: Dict[str, Any]) -> List[str]:
    gates, table = ref["gates"], ref["stability"]
    ks = [float(k) for k in table["k"]]
    skip = set(known_deviations(ref)["stability_k"])
    failures = []
    by_tk = {}
    for r in rows:
        if r.M != table["M"]:
            continue
        want_row = _match_time(table["h1_error"], r.t)
        match = [i for i, k in enumerate(ks) if abs(k - r.k) < 1e-9]
        if want_row is None or not match:
            continue
        want = want_row[match[0]]
        by_tk[(r.t, ks[match[0]])] = r.h1_error
        if ks[match[0]] in skip:
            continue
        if not check_threshold(_rel(r.h1_error, want), gates["stability_rel"]):
            failures.append(f"[t={r.t:g} k={r.k:g}] h1_error={r.h1_error:.4e} vs {want:.4e} violates {gates['stability_rel']}")
    for (t, k), e1 in sorted(by_tk.items()):
        if k == 1.0 and (t, 5.0) in by_tk:
            if not check_threshold(_rel(by_tk[(t, 5.0)], e1), gates["k1_k5_rel"]):
                failures.append(f"[t={t:g}] k=1 and k=5 errors differ by more than {gates['k1_k5_rel']}")
    return failures

def main(argv: Optional[List[str]] = None) -> int:
    ap = argparse.ArgumentParser(description="Check a study CSV against the reference tables")
    ap.add_argument("--csv", required=True)
    ap.add_argument("--kind", choices=["convergence", "stability"], default="convergence")
    ap.add_argument("--reference", default=REFERENCE_TABLES_YAML)
    args = ap.parse_args(argv)

    rows = read_csv(args.csv)
    ref = load_reference(args.reference)
    failures = check_convergence(rows, ref) if args.kind == "convergence" else check_stability(rows, ref)
    dev = known_deviations(ref)
    noted = dev["convergence"] if args.kind == "convergence" else [f"k={k:g}" for k in dev["stability_k"]]
    if noted:
        print(f"Known deviations, not gated: {', '.join(noted)}")
    if failures:
        print("\n".join(failures))
        return 1
    print(f"All {args.kind} gates satisfied ({len(rows)} rows).")
    return 0

if __name__ == "__main__":
    sys.exit(main())
