"""Global assembly over interior dofs.

Boundary rows and columns are dropped (V_h0 directly, no penalty). All
reductions go through coo->csr summation or numpy.bincount, both of which
accumulate in input order, so repeated assemblies are bit-identical.
"""
from __future__ import annotations
from typing import Callable
import numpy as np
import scipy.sparse as sp
from ..mesh import Mesh, DofMap
from ..linalg import SparseComplexMatrix, as_csr
from .element import element_matrices
from .quadrature import QuadratureRule, ElementQuadrature

PointFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]
RealFunction = Callable[[np.ndarray], np.ndarray]

def _quadrature(mesh: Mesh, rule: QuadratureRule | ElementQuadrature) -> ElementQuadrature:
    if isinstance(rule, ElementQuadrature):
        return rule
    return ElementQuadrature.build(mesh, rule)

def _scatter_matrix(mesh: Mesh, dofs: DofMap, local: np.ndarray) -> SparseComplexMatrix:
    """Sum element matrices (4x4 shared, or (E,4,4)) into an n x n CSR matrix."""
    ed = dofs.element_dofs(mesh)
    rows = np.repeat(ed, 4, axis=1)   # (E,16): a-major
    cols = np.tile(ed, (1, 4))
    vals = np.broadcast_to(local, (ed.shape[0], 4, 4)).reshape(ed.shape[0], 16)
    keep = (rows >= 0) & (cols >= 0)
    n = dofs.n_dofs
    A = sp.coo_matrix((vals[keep].astype(np.complex128), (rows[keep], cols[keep])), shape=(n, n))
    return as_csr(A)

def scatter_vector(mesh: Mesh, dofs: DofMap, local: np.ndarray) -> np.ndarray:
    """Sum element vectors (E,4) into a length-n dof vector."""
    ed = dofs.element_dofs(mesh)
    keep = ed >= 0
    idx, vals = ed[keep], local[keep]
    n = dofs.n_dofs
    return (np.bincount(idx, weights=vals.real, minlength=n)
            + 1j * np.bincount(idx, weights=vals.imag, minlength=n))

def assemble_mass(mesh: Mesh, dofs: DofMap) -> SparseComplexMatrix:
    return _scatter_matrix(mesh, dofs, element_matrices(mesh.hx, mesh.hy).mass)

def assemble_stiffness(mesh: Mesh, dofs: DofMap) -> SparseComplexMatrix:
    return _scatter_matrix(mesh, dofs, element_matrices(mesh.hx, mesh.hy).stiffness)

def nodal_values(coefficients: np.ndarray, mesh: Mesh, dofs: DofMap) -> np.ndarray:
    """Interior coefficients -> full nodal vector with zeros on the boundary."""
    out = np.zeros(mesh.n_nodes, dtype=np.complex128)
    out[dofs.dof_to_node] = coefficients
    return out

def values_at_quadrature(coefficients: np.ndarray, mesh: Mesh, dofs: DofMap,
                         eq: ElementQuadrature) -> np.ndarray:
    """Q1 expansion of a V_h0 field evaluated at every quadrature point, (E, Q)."""
    local = nodal_values(coefficients, mesh, dofs)[mesh.elements]
    return local @ eq.phi.T

def assemble_function_load(mesh: Mesh, dofs: DofMap, w: PointFunction,
                           rule: QuadratureRule | ElementQuadrature) -> np.ndarray:
    """Entry i ~ int w phi_i."""
    eq = _quadrature(mesh, rule)
    wq = np.asarray(w(eq.x, eq.y), dtype=np.complex128)
    return scatter_vector(mesh, dofs, (wq * eq.weights) @ eq.phi)

def assemble_nonlinear_load(mesh: Mesh, dofs: DofMap, f: RealFunction, u_hat, u_tilde,
                            rule: QuadratureRule | ElementQuadrature) -> np.ndarray:
    """Entry i ~ int f(|u_hat|^2) u_tilde phi_i, both fields expanded at the quadrature points.

    u_hat and u_tilde are FemFields or bare coefficient arrays.
    """
    eq = _quadrature(mesh, rule)
    uh = values_at_quadrature(getattr(u_hat, "coefficients", u_hat), mesh, dofs, eq)
    ut = values_at_quadrature(getattr(u_tilde, "coefficients", u_tilde), mesh, dofs, eq)
    integrand = np.asarray(f(np.abs(uh) ** 2), dtype=float) * ut
    return scatter_vector(mesh, dofs, (integrand * eq.weights) @ eq.phi)

def assemble_weighted_mass(mesh: Mesh, dofs: DofMap, c: np.ndarray,
                           rule: QuadratureRule | ElementQuadrature) -> SparseComplexMatrix:
    """Matrix with entries int c phi_j phi_i for a coefficient c given at the quadrature points (E, Q)."""
    eq = _quadrature(mesh, rule)
    local = np.einsum("eq,qa,qb->eab", c * eq.weights, eq.phi, eq.phi)
    return _scatter_matrix(mesh, dofs, local)
