"""Q1 shape functions on the reference square [0,1]^2.

Local corners (counterclockwise): 0=(0,0), 1=(1,0), 2=(1,1), 3=(0,1).
"""
from __future__ import annotations
import numpy as np
from ..common.exceptions import InvalidArgumentError

# corner coordinates; N_i(xi, eta) = lx(xi) * ly(eta) with lx, ly the 1D hats at these corners
CORNERS = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
CORNER_IX = np.array([0, 1, 1, 0])
CORNER_IY = np.array([0, 0, 1, 1])

def _hat(c: np.ndarray, s: np.ndarray) -> np.ndarray:
    return np.where(c == 1, s, 1.0 - s)

def _dhat(c: np.ndarray) -> np.ndarray:
    return np.where(c == 1, 1.0, -1.0)

def basis_eval(local_index: int, point: tuple[float, float]) -> tuple[float, tuple[float, float]]:
    """Value and reference gradient of N_local_index at (xi, eta)."""
    if local_index not in (0, 1, 2, 3):
        raise InvalidArgumentError(f"local index must be in 0..3, got {local_index!r}")
    xi, eta = point
    cx, cy = CORNER_IX[local_index], CORNER_IY[local_index]
    vx, vy = float(_hat(cx, xi)), float(_hat(cy, eta))
    return vx * vy, (float(_dhat(cx)) * vy, vx * float(_dhat(cy)))

def reference_values(points: np.ndarray) -> np.ndarray:
    """Shape values at reference points, shape (Q, 4)."""
    xi, eta = points[:, 0:1], points[:, 1:2]
    return _hat(CORNER_IX, xi) * _hat(CORNER_IY, eta)

def reference_gradients(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """d/dxi and d/deta of the shape functions at reference points, each (Q, 4)."""
    xi, eta = points[:, 0:1], points[:, 1:2]
    dxi = _dhat(CORNER_IX) * _hat(CORNER_IY, eta)
    deta = _hat(CORNER_IX, xi) * _dhat(CORNER_IY)
    return dxi, deta
