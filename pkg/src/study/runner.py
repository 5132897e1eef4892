"""Study orchestration: one solver run per (mesh size, time step), errors at every snapshot."""
from __future__ import annotations
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from typing import Dict, List, Sequence
from tqdm import tqdm
from ..common.constants import GRID_TOL
from ..common.exceptions import InvalidArgumentError, SolverFailureError
from ..common.logging import get_logger
from ..errors import convergence_order, h1_error, superclose_error
from ..fem import gauss_rule
from ..mesh import build_dof_map, build_macro_patches, build_uniform_mesh
from ..problem import get_problem
from ..projections import postprocess
from ..stepper import CrankNicolsonStepper, StepperConfig
from .schemas import ErrorReport, ErrorRow, StudyConfig

log = get_logger("study/runner")

def _on_grid(t: float, tau: float) -> bool:
    r = t / tau
    return abs(r - round(r)) <= GRID_TOL * max(1.0, r)

def _grid_spacing(times: Sequence[float]) -> Fraction:
    """Largest step dividing every time (times read as short decimals)."""
    fracs = [Fraction(repr(float(t))).limit_denominator(10 ** 9) for t in times]
    num = 0
    den = 1
    for f in fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    for f in fracs:
        num = math.gcd(num, f.numerator * (den // f.denominator))
    return Fraction(num, den)

def plan_time_step(h: float, times: Sequence[float], tau_rule: str = "h", k: float = 1.0) -> float:
    """tau for a run on mesh width h.

    "kh": tau = k*h, rejected unless every time is a multiple of it.
    "h": tau = h when h divides every time, otherwise the largest step below h that does.
    """
    if tau_rule == "kh":
        tau = k * h
        bad = [t for t in times if not _on_grid(t, tau)]
        if bad:
            raise InvalidArgumentError(f"times {bad} are not multiples of tau = {k:g}h = {tau:.6g}")
        return tau
    if tau_rule != "h":
        raise InvalidArgumentError(f"unknown tau rule {tau_rule!r}")
    if all(_on_grid(t, h) for t in times):
        return h
    g = float(_grid_spacing(times))
    n = math.ceil(g / h - GRID_TOL)
    tau = g / n
    log.warning(f"tau = h = {h:.6g} does not divide the snapshot grid; using tau = {tau:.6g}")
    return tau

def _nominal_width(config: StudyConfig, M: int) -> float:
    """1/M on the unit square; the time step is planned from this width under either element count."""
    d = get_problem(config.problem).domain
    return max(d.lx, d.ly) / M

def _run_single(config: StudyConfig, M: int, tau: float, k: float) -> List[ErrorRow]:
    spec = get_problem(config.problem, T=config.t_final)
    mesh = build_uniform_mesh(config.elements(M), spec.domain)
    dofs = build_dof_map(mesh)
    rule = gauss_rule(config.quad)
    stepper_cfg = StepperConfig.from_final_time(config.t_final, tau, rule=rule, solver_tol=config.solver_tol,
                                                solver_method=config.solver, source_rule=config.source_rule)
    stepper = CrankNicolsonStepper(spec, mesh, dofs, stepper_cfg)
    try:
        snapshots = stepper.run(config.snapshots)
    except SolverFailureError as e:
        e.mesh_size = M
        raise
    eq = stepper.eq
    patches = build_macro_patches(mesh) if config.postprocess else None

    rows = []
    for t, U in zip(config.snapshots, snapshots):
        row = ErrorRow(
            t=t, M=M, tau=tau, k=k,
            h1_error=h1_error(spec.u_exact, spec.grad_u_exact, U, mesh, t, eq, dofs=dofs),
            superclose=superclose_error(spec.u_exact, U, mesh, dofs, t,
                                        mass=stepper.mass, stiffness=stepper.stiffness),
        )
        if patches is not None:
            row.postprocessed = h1_error(spec.u_exact, spec.grad_u_exact, postprocess(U, patches, mesh, dofs),
                                         mesh, t, eq)
        rows.append(row)
    log.info(f"M={M} m={mesh.m} tau={tau:.6g} done: " + ", ".join(f"t={r.t:g} H1={r.h1_error:.4e}" for r in rows))
    return rows

def _run_all(config: StudyConfig, jobs: List[tuple[int, float, float]], desc: str) -> List[ErrorRow]:
    rows: List[ErrorRow] = []
    with ThreadPoolExecutor(max_workers=max(1, config.workers)) as ex:
        futures = [ex.submit(_run_single, config, M, tau, k) for (M, tau, k) in jobs]
        for fut in tqdm(as_completed(futures), total=len(futures), desc=desc):
            rows.extend(fut.result())
    return rows

def _fill_orders(rows: List[ErrorRow]) -> None:
    by_time: Dict[float, List[ErrorRow]] = {}
    for r in rows:
        by_time.setdefault(r.t, []).append(r)
    for group in by_time.values():
        group.sort(key=lambda r: r.M)
        for coarse, fine in zip(group, group[1:]):
            ratio = fine.M / coarse.M
            fine.h1_order = convergence_order(coarse.h1_error, fine.h1_error, ratio)
            fine.superclose_order = convergence_order(coarse.superclose, fine.superclose, ratio)
            if coarse.postprocessed is not None and fine.postprocessed is not None:
                fine.post_order = convergence_order(coarse.postprocessed, fine.postprocessed, ratio)

def run_convergence_study(config: StudyConfig) -> ErrorReport:
    times = [*config.snapshots, config.t_final]
    k = config.k[0] if config.tau_rule == "kh" else 1.0
    jobs = []
    for M in sorted(set(config.sizes)):
        h = _nominal_width(config, M)
        tau = plan_time_step(h, times, config.tau_rule, k)
        jobs.append((M, tau, tau / h))
    rows = _run_all(config, jobs, desc="mesh sizes")
    _fill_orders(rows)
    report = ErrorReport(study="convergence", problem=config.problem, rows=rows)
    report.rows = report.sorted_rows()
    return report

def run_stability_study(config: StudyConfig) -> ErrorReport:
    M = config.sizes[0]
    h = _nominal_width(config, M)
    times = [*config.snapshots, config.t_final]
    jobs = [(M, plan_time_step(h, times, "kh", k), k) for k in config.k]
    rows = _run_all(config, jobs, desc="time steps")
    report = ErrorReport(study="stability", problem=config.problem, rows=rows)
    report.rows = report.sorted_rows()
    return report

def run_study(config: StudyConfig) -> ErrorReport:
    if config.study == "stability":
        return run_stability_study(config)
    return run_convergence_study(config)
