"""Tensor Gauss-Legendre rules on [0,1]^2 and their per-mesh precomputation."""
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
import numpy as np
from ..common.exceptions import InvalidArgumentError
from ..mesh import Mesh
from .basis import reference_values, reference_gradients

@dataclass(frozen=True, eq=False)
class QuadratureRule:
    points: np.ndarray   # (Q, 2) in [0,1]^2
    weights: np.ndarray  # (Q,), sum to 1
    degree: int          # exact for polynomials of this degree per axis

    @property
    def n_points(self) -> int:
        return int(self.weights.shape[0])

@lru_cache(maxsize=None)
def gauss_rule(n: int = 3) -> QuadratureRule:
    """n x n Gauss-Legendre points, exact to degree 2n-1 in each variable."""
    if n < 1:
        raise InvalidArgumentError(f"quadrature needs at least one point per axis, got {n}")
    x, w = np.polynomial.legendre.leggauss(n)
    x, w = 0.5 * (x + 1.0), 0.5 * w
    XI, ETA = np.meshgrid(x, x)
    WX, WY = np.meshgrid(w, w)
    points = np.column_stack([XI.ravel(), ETA.ravel()])
    weights = (WX * WY).ravel()
    points.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(points=points, weights=weights, degree=2 * n - 1)

@dataclass(frozen=True, eq=False)
class ElementQuadrature:
    """Physical quadrature data for every element of a uniform mesh.

    x, y are (E, Q); `weights` already include the Jacobian hx*hy; `phi` is
    (Q, 4) and `dphi_dx`, `dphi_dy` are the physical shape gradients (Q, 4),
    identical on every element of a uniform mesh.
    """
    mesh: Mesh
    rule: QuadratureRule
    x: np.ndarray
    y: np.ndarray
    weights: np.ndarray
    phi: np.ndarray
    dphi_dx: np.ndarray
    dphi_dy: np.ndarray

    @classmethod
    def build(cls, mesh: Mesh, rule: QuadratureRule) -> "ElementQuadrature":
        origin = mesh.element_origins()
        x = origin[:, 0:1] + rule.points[:, 0] * mesh.hx
        y = origin[:, 1:2] + rule.points[:, 1] * mesh.hy
        dxi, deta = reference_gradients(rule.points)
        return cls(mesh=mesh, rule=rule, x=x, y=y,
                   weights=rule.weights * (mesh.hx * mesh.hy),
                   phi=reference_values(rule.points),
                   dphi_dx=dxi / mesh.hx, dphi_dy=deta / mesh.hy)

    def integrate(self, values: np.ndarray) -> complex | float:
        """Sum of values (E, Q) against the quadrature weights over the whole mesh."""
        return np.sum(values @ self.weights)
