"""Analytic Q1 element matrices on an hx x hy rectangle."""
from __future__ import annotations
from dataclasses import dataclass
import numpy as np
from ..common.exceptions import InvalidArgumentError
from .basis import CORNER_IX, CORNER_IY

@dataclass(frozen=True, eq=False)
class ElementMatrices:
    mass: np.ndarray       # 4x4
    stiffness: np.ndarray  # 4x4

def element_matrices(hx: float, hy: float) -> ElementMatrices:
    """Tensor products of the exact 1D linear-element mass and stiffness matrices."""
    if not (hx > 0 and hy > 0):
        raise InvalidArgumentError(f"element sizes must be positive, got hx={hx}, hy={hy}")
    m1 = np.array([[2.0, 1.0], [1.0, 2.0]]) / 6.0
    k1 = np.array([[1.0, -1.0], [-1.0, 1.0]])
    mx, my = hx * m1[np.ix_(CORNER_IX, CORNER_IX)], hy * m1[np.ix_(CORNER_IY, CORNER_IY)]
    kx, ky = k1[np.ix_(CORNER_IX, CORNER_IX)] / hx, k1[np.ix_(CORNER_IY, CORNER_IY)] / hy
    mass = mx * my
    stiffness = kx * my + mx * ky
    mass.setflags(write=False)
    stiffness.setflags(write=False)
    return ElementMatrices(mass=mass, stiffness=stiffness)
