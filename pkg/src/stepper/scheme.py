"""Fully discrete linearized Crank-Nicolson Galerkin scheme.

Every step solves

    A(w) a^n = (2/tau) M a^{n-1} - A(w) a^{n-1} + G^{n-1/2},
    A(w) = M/tau + ((nu+i eta)/2) K + ((kappa+i zeta)/2) W(w) - (gamma/2) M,

where W(w) has entries int f(|w|^2) phi_j phi_i and w is the field frozen
inside f: U^0 for the predictor, (U^{1,0}+U^0)/2 for the corrector and the
extrapolant (3/2)U^{n-1} - (1/2)U^{n-2} for n >= 2. The source enters only
through G. When the problem is linear, A does not depend on w and is
factorized once per run.
"""
from __future__ import annotations
from typing import Iterator, Sequence
import numpy as np
from ..common.constants import GRID_TOL
from ..common.exceptions import InvalidArgumentError, SolverFailureError
from ..common.logging import get_logger
from ..fem import (
    ElementQuadrature,
    assemble_function_load,
    assemble_mass,
    assemble_stiffness,
    assemble_weighted_mass,
    values_at_quadrature,
)
from ..linalg import Factorization, SolveReport, axpy_matrix, factorize
from ..mesh import Mesh, DofMap
from ..problem import ProblemSpec
from .field import FemField, StepperConfig

log = get_logger("stepper")

def initial_field(spec: ProblemSpec, mesh: Mesh, dofs: DofMap) -> FemField:
    """U_h^0 = I_h u0 (nodal values at the interior nodes)."""
    pts = mesh.nodes[dofs.dof_to_node]
    return FemField(np.asarray(spec.u0(pts[:, 0], pts[:, 1]), dtype=np.complex128), t=0.0)

def snapshot_steps(times: Sequence[float], tau: float, n_steps: int) -> list[int]:
    """Step index of each snapshot time; times off the tau grid or past the end are rejected."""
    out = []
    for t in times:
        n = round(t / tau)
        if abs(t / tau - n) > GRID_TOL * max(1.0, abs(t / tau)):
            raise InvalidArgumentError(f"snapshot time {t} is not a multiple of tau={tau}")
        if n < 0 or n > n_steps:
            raise InvalidArgumentError(f"snapshot time {t} outside [0, {n_steps * tau}]")
        out.append(int(n))
    return out

class CrankNicolsonStepper:
    def __init__(self, spec: ProblemSpec, mesh: Mesh, dofs: DofMap, config: StepperConfig):
        self.spec = spec
        self.mesh = mesh
        self.dofs = dofs
        self.config = config
        self.eq = ElementQuadrature.build(mesh, config.rule)
        self.mass = assemble_mass(mesh, dofs)
        self.stiffness = assemble_stiffness(mesh, dofs)
        tau = config.tau
        # M/tau + ((nu+i eta)/2) K - (gamma/2) M
        self.lhs_base = axpy_matrix(1.0 / tau - spec.gamma / 2.0, self.mass, spec.diffusion / 2.0, self.stiffness)
        self.reports: list[SolveReport] = []
        self._linear_factor: Factorization | None = None

    @property
    def n_dofs(self) -> int:
        return self.dofs.n_dofs

    def mass_norm(self, field: FemField) -> float:
        a = field.coefficients
        return float(np.sqrt(max(np.vdot(a, self.mass @ a).real, 0.0)))

    # ----- building blocks -----

    def _lhs(self, frozen: np.ndarray | None) -> Factorization:
        cfg = self.config
        if self.spec.is_linear:
            if self._linear_factor is None:
                self._linear_factor = factorize(self.lhs_base, tol=cfg.solver_tol, method=cfg.solver_method)
            return self._linear_factor
        wq = values_at_quadrature(frozen, self.mesh, self.dofs, self.eq)
        c = np.asarray(self.spec.f(np.abs(wq) ** 2), dtype=float)
        W = assemble_weighted_mass(self.mesh, self.dofs, c, self.eq)
        A = axpy_matrix(1.0, self.lhs_base, self.spec.reaction / 2.0, W)
        return factorize(A, tol=cfg.solver_tol, method=cfg.solver_method)

    def _source_load(self, t_prev: float) -> np.ndarray | None:
        spec, tau = self.spec, self.config.tau
        if spec.source_g is None:
            return None
        if self.config.source_rule == "midpoint":
            tm = t_prev + 0.5 * tau
            return assemble_function_load(self.mesh, self.dofs, lambda x, y: spec.source_g(x, y, tm), self.eq)
        g0 = assemble_function_load(self.mesh, self.dofs, lambda x, y: spec.source_g(x, y, t_prev), self.eq)
        g1 = assemble_function_load(self.mesh, self.dofs, lambda x, y: spec.source_g(x, y, t_prev + tau), self.eq)
        return 0.5 * (g0 + g1)

    def _advance(self, prev: FemField, frozen: np.ndarray | None, step: int) -> FemField:
        self._check(prev)
        lhs = self._lhs(frozen)
        a = prev.coefficients
        rhs = (2.0 / self.config.tau) * (self.mass @ a) - lhs.A @ a
        load = self._source_load((step - 1) * self.config.tau)
        if load is not None:
            rhs = rhs + load
        try:
            x, report = lhs.solve(rhs)
        except SolverFailureError as e:
            e.step = step
            raise
        self.reports.append(report)
        log.debug(f"step {step}: residual={report.relative_residual:.2e} time={report.wall_time:.3f}s")
        return FemField(x, t=step * self.config.tau)

    def _check(self, field: FemField) -> None:
        if field.n_dofs != self.n_dofs:
            raise InvalidArgumentError(f"field has {field.n_dofs} coefficients, mesh has {self.n_dofs} dofs")

    # ----- scheme -----

    def predictor_step(self, U0: FemField) -> FemField:
        """U_h^{1,0}: nonlinearity frozen at U_h^0."""
        return self._advance(U0, U0.coefficients, step=1)

    def corrector_step(self, U0: FemField, U10: FemField) -> FemField:
        """U_h^1: nonlinearity frozen at (U_h^{1,0} + U_h^0)/2."""
        self._check(U10)
        return self._advance(U0, 0.5 * (U10.coefficients + U0.coefficients), step=1)

    def cn_step(self, U_prev: FemField, U_prev2: FemField, n: int) -> FemField:
        """U_h^n for n >= 2 with the extrapolant (3/2)U^{n-1} - (1/2)U^{n-2} inside f."""
        if n < 2:
            raise InvalidArgumentError(f"extrapolated step needs n >= 2, got {n}")
        self._check(U_prev2)
        extrapolant = 1.5 * U_prev.coefficients - 0.5 * U_prev2.coefficients
        return self._advance(U_prev, extrapolant, step=n)

    def trajectory(self, initial: FemField | None = None) -> Iterator[FemField]:
        """Yield U^0, U^1, ..., U^N."""
        U0 = initial if initial is not None else initial_field(self.spec, self.mesh, self.dofs)
        self._check(U0)
        yield U0
        U1 = self.corrector_step(U0, self.predictor_step(U0))
        yield U1
        prev2, prev = U0, U1
        for n in range(2, self.config.n_steps + 1):
            cur = self.cn_step(prev, prev2, n)
            yield cur
            prev2, prev = prev, cur

    def run(self, snapshot_times: Sequence[float], initial: FemField | None = None) -> list[FemField]:
        steps = snapshot_steps(snapshot_times, self.config.tau, self.config.n_steps)
        wanted = set(steps)
        last = max(steps, default=0)
        found: dict[int, FemField] = {}
        for n, state in enumerate(self.trajectory(initial)):
            if n in wanted:
                found[n] = state
            if n >= last:
                break
        if self.reports:
            worst = max(r.relative_residual for r in self.reports)
            log.info(f"m={self.mesh.m} tau={self.config.tau:.4g} steps={last} "
                     f"solves={len(self.reports)} max_residual={worst:.2e}")
        return [found[n] for n in steps]

def run(spec: ProblemSpec, mesh: Mesh, dofs: DofMap, config: StepperConfig,
        snapshot_times: Sequence[float]) -> list[FemField]:
    return CrankNicolsonStepper(spec, mesh, dofs, config).run(snapshot_times)
