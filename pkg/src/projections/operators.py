"""I_h, R_h and I_2h^2."""
from __future__ import annotations
from typing import Callable
import numpy as np
from ..fem import QuadratureRule, ElementQuadrature, assemble_stiffness, nodal_values, scatter_vector
from ..linalg import solve
from ..mesh import Mesh, DofMap, MacroPatchSet, build_dof_map, build_macro_patches
from ..stepper import FemField
from .functions import Q2PatchFunction

PointFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]
GradientFunction = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]

def interpolate(u: PointFunction, mesh: Mesh, dofs: DofMap, t: float = 0.0) -> FemField:
    """Nodal values at the interior nodes."""
    pts = mesh.nodes[dofs.dof_to_node]
    return FemField(np.asarray(u(pts[:, 0], pts[:, 1]), dtype=np.complex128), t=t)

def ritz_project(grad_u: GradientFunction, mesh: Mesh, dofs: DofMap,
                 rule: QuadratureRule | ElementQuadrature, tol: float | None = None, t: float = 0.0) -> FemField:
    """Solve K a = b with b_i = int grad u . grad phi_i (Gauss quadrature)."""
    eq = rule if isinstance(rule, ElementQuadrature) else ElementQuadrature.build(mesh, rule)
    ux, uy = grad_u(eq.x, eq.y)
    local = (np.asarray(ux) * eq.weights) @ eq.dphi_dx + (np.asarray(uy) * eq.weights) @ eq.dphi_dy
    b = scatter_vector(mesh, dofs, local)
    a, _ = solve(assemble_stiffness(mesh, dofs), b, tol=tol, method="direct")
    return FemField(a, t=t)

def postprocess(U: FemField, patches: MacroPatchSet | None, mesh: Mesh,
                dofs: DofMap | None = None) -> Q2PatchFunction:
    """Biquadratic interpolation of the Q1 nodal values on every 2x2 macro patch."""
    patches = patches if patches is not None else build_macro_patches(mesh)
    dofs = dofs if dofs is not None else build_dof_map(mesh)
    return Q2PatchFunction.from_nodal(mesh, patches, nodal_values(U.coefficients, mesh, dofs))
