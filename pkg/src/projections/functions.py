"""Evaluable piecewise-polynomial functions on a uniform mesh.

Both classes expose the same protocol: pointwise `__call__(x, y)`,
`gradient(x, y)` and `at_quadrature(eq)` returning (values, d/dx, d/dy), each
of shape (E, Q), at the element quadrature points.
"""
from __future__ import annotations
from functools import lru_cache
import numpy as np
from ..fem import ElementQuadrature, nodal_values
from ..fem.basis import reference_values, reference_gradients
from ..mesh import Mesh, DofMap, MacroPatchSet

def _locate(mesh: Mesh, x, y, cell_x: float, cell_y: float, cells: int):
    """Cell indices and local coordinates in [0,1] for cells of size cell_x x cell_y."""
    d = mesh.domain
    sx = (np.asarray(x, dtype=float) - d.ax) / cell_x
    sy = (np.asarray(y, dtype=float) - d.ay) / cell_y
    i = np.clip(np.floor(sx).astype(np.int64), 0, cells - 1)
    j = np.clip(np.floor(sy).astype(np.int64), 0, cells - 1)
    return i, j, sx - i, sy - j

class Q1Function:
    """A V_h0 field (interior coefficients) bound to its mesh."""

    def __init__(self, coefficients: np.ndarray, mesh: Mesh, dofs: DofMap):
        self.mesh = mesh
        self.dofs = dofs
        self.nodal = nodal_values(coefficients, mesh, dofs)

    def _local(self, x, y):
        m = self.mesh
        i, j, xi, eta = _locate(m, x, y, m.hx, m.hy, m.m)
        corners = self.nodal[m.elements[j * m.m + i]]            # (..., 4)
        pts = np.stack([np.ravel(xi), np.ravel(eta)], axis=1)
        return corners.reshape(-1, 4), pts, np.shape(xi)

    def __call__(self, x, y):
        corners, pts, shape = self._local(x, y)
        return np.sum(corners * reference_values(pts), axis=1).reshape(shape)

    def gradient(self, x, y):
        corners, pts, shape = self._local(x, y)
        dxi, deta = reference_gradients(pts)
        gx = np.sum(corners * dxi, axis=1) / self.mesh.hx
        gy = np.sum(corners * deta, axis=1) / self.mesh.hy
        return gx.reshape(shape), gy.reshape(shape)

    def at_quadrature(self, eq: ElementQuadrature):
        local = self.nodal[self.mesh.elements]
        return local @ eq.phi.T, local @ eq.dphi_dx.T, local @ eq.dphi_dy.T

# 1D quadratic Lagrange basis on the nodes 0, 1/2, 1
def _q2_1d(s: np.ndarray):
    vals = np.stack([(2 * s - 1) * (s - 1), 4 * s * (1 - s), s * (2 * s - 1)], axis=-1)
    ders = np.stack([4 * s - 3, 4 - 8 * s, 4 * s - 1], axis=-1)
    return vals, ders

def q2_basis(s: np.ndarray, t: np.ndarray):
    """Nine tensor Q2 shape values and (d/ds, d/dt) at patch-local points, lattice order 3*b + a."""
    vs, ds = _q2_1d(np.asarray(s, dtype=float))
    vt, dt = _q2_1d(np.asarray(t, dtype=float))
    val = (vt[..., :, None] * vs[..., None, :]).reshape(*vs.shape[:-1], 9)
    d_s = (vt[..., :, None] * ds[..., None, :]).reshape(*vs.shape[:-1], 9)
    d_t = (dt[..., :, None] * vs[..., None, :]).reshape(*vs.shape[:-1], 9)
    return val, d_s, d_t

@lru_cache(maxsize=16)
def _q2_at_offsets(points_key: bytes, n: int):
    """Q2 basis at each element's quadrature points, for the 4 element offsets inside a patch."""
    pts = np.frombuffer(points_key).reshape(n, 2)
    out = []
    for offset in range(4):
        di, dj = offset % 2, offset // 2
        out.append(q2_basis(0.5 * (di + pts[:, 0]), 0.5 * (dj + pts[:, 1])))
    return out

class Q2PatchFunction:
    """Piecewise biquadratic on 2h x 2h macro patches through the nine lattice nodal values.

    Continuous inside each patch; the gradient generally jumps across patch edges.
    """

    def __init__(self, lattice_values: np.ndarray, mesh: Mesh, patches: MacroPatchSet):
        self.values = lattice_values  # (P, 9)
        self.mesh = mesh
        self.patches = patches

    @classmethod
    def from_nodal(cls, mesh: Mesh, patches: MacroPatchSet, nodal: np.ndarray) -> "Q2PatchFunction":
        return cls(np.asarray(nodal, dtype=np.complex128)[patches.lattice], mesh, patches)

    def _local(self, x, y):
        m = self.mesh
        half = m.m // 2
        i, j, s, t = _locate(m, x, y, 2 * m.hx, 2 * m.hy, half)
        vals = self.values[(j * half + i).ravel()]
        return vals, np.ravel(s), np.ravel(t), np.shape(s)

    def __call__(self, x, y):
        vals, s, t, shape = self._local(x, y)
        phi, _, _ = q2_basis(s, t)
        return np.sum(vals * phi, axis=1).reshape(shape)

    def gradient(self, x, y):
        vals, s, t, shape = self._local(x, y)
        _, d_s, d_t = q2_basis(s, t)
        gx = np.sum(vals * d_s, axis=1) / (2 * self.mesh.hx)
        gy = np.sum(vals * d_t, axis=1) / (2 * self.mesh.hy)
        return gx.reshape(shape), gy.reshape(shape)

    def at_quadrature(self, eq: ElementQuadrature):
        pts = np.ascontiguousarray(eq.rule.points, dtype=float)
        tables = _q2_at_offsets(pts.tobytes(), pts.shape[0])
        E, Q = eq.x.shape
        v = np.empty((E, Q), dtype=np.complex128)
        gx = np.empty_like(v)
        gy = np.empty_like(v)
        for offset, (phi, d_s, d_t) in enumerate(tables):
            sel = self.patches.element_offset == offset
            local = self.values[self.patches.element_patch[sel]]   # (E_sel, 9)
            v[sel] = local @ phi.T
            gx[sel] = local @ d_s.T / (2 * self.mesh.hx)
            gy[sel] = local @ d_t.T / (2 * self.mesh.hy)
        return v, gx, gy
