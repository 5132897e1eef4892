"""L2 / H1 error norms.

Errors against the exact solution use element-wise Gauss quadrature; errors
between two Q1 fields use the exact mass and stiffness matrices.
"""
from __future__ import annotations
from typing import Callable, Protocol, Union
import numpy as np
from ..common.exceptions import InvalidArgumentError
from ..fem import QuadratureRule, ElementQuadrature, assemble_mass, assemble_stiffness
from ..linalg import SparseComplexMatrix
from ..mesh import Mesh, DofMap
from ..projections import Q1Function, interpolate
from ..stepper import FemField

class QuadratureEvaluable(Protocol):
    def at_quadrature(self, eq: ElementQuadrature) -> tuple[np.ndarray, np.ndarray, np.ndarray]: ...

Approximation = Union[FemField, QuadratureEvaluable]
ExactFunction = Callable[[np.ndarray, np.ndarray, float], np.ndarray]
ExactGradient = Callable[[np.ndarray, np.ndarray, float], tuple[np.ndarray, np.ndarray]]

def _eq(mesh: Mesh, rule: QuadratureRule | ElementQuadrature) -> ElementQuadrature:
    return rule if isinstance(rule, ElementQuadrature) else ElementQuadrature.build(mesh, rule)

def _evaluable(approx: Approximation, mesh: Mesh, dofs: DofMap | None) -> QuadratureEvaluable:
    if isinstance(approx, FemField):
        if dofs is None:
            raise InvalidArgumentError("a FemField needs its DofMap to be evaluated")
        return Q1Function(approx.coefficients, mesh, dofs)
    return approx

def l2_error(u_exact: ExactFunction, approx: Approximation, mesh: Mesh, t: float,
             rule: QuadratureRule | ElementQuadrature, dofs: DofMap | None = None) -> float:
    eq = _eq(mesh, rule)
    v, _, _ = _evaluable(approx, mesh, dofs).at_quadrature(eq)
    diff = u_exact(eq.x, eq.y, t) - v
    return float(np.sqrt(eq.integrate(np.abs(diff) ** 2)))

def h1_error(u_exact: ExactFunction, grad_exact: ExactGradient, approx: Approximation, mesh: Mesh,
             t: float, rule: QuadratureRule | ElementQuadrature, dofs: DofMap | None = None) -> float:
    """sqrt(||u - v||_0^2 + ||grad(u - v)||_0^2)."""
    eq = _eq(mesh, rule)
    v, vx, vy = _evaluable(approx, mesh, dofs).at_quadrature(eq)
    ux, uy = grad_exact(eq.x, eq.y, t)
    density = (np.abs(u_exact(eq.x, eq.y, t) - v) ** 2
               + np.abs(ux - vx) ** 2 + np.abs(uy - vy) ** 2)
    return float(np.sqrt(eq.integrate(density)))

def q1_h1_norm(coefficients: np.ndarray, mass: SparseComplexMatrix, stiffness: SparseComplexMatrix) -> float:
    d = np.asarray(coefficients)
    sq = np.vdot(d, mass @ d).real + np.vdot(d, stiffness @ d).real
    return float(np.sqrt(max(sq, 0.0)))

def superclose_error(u_exact: ExactFunction, U: FemField, mesh: Mesh, dofs: DofMap, t: float,
                     mass: SparseComplexMatrix | None = None,
                     stiffness: SparseComplexMatrix | None = None) -> float:
    """||I_h u - U||_1, integrated exactly (both fields are Q1)."""
    mass = mass if mass is not None else assemble_mass(mesh, dofs)
    stiffness = stiffness if stiffness is not None else assemble_stiffness(mesh, dofs)
    Ih = interpolate(lambda x, y: u_exact(x, y, t), mesh, dofs, t=t)
    return q1_h1_norm(Ih.coefficients - U.coefficients, mass, stiffness)
