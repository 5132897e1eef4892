"""2x2 macro-element patches carrying the nine Q2 lattice nodes."""
from __future__ import annotations
from dataclasses import dataclass
import numpy as np
from ..common.exceptions import UnsupportedMeshError
from .grid import Mesh

@dataclass(frozen=True, eq=False)
class MacroPatchSet:
    """Patch p = J*(m/2) + I covers elements (2I..2I+1) x (2J..2J+1).

    `lattice[p, 3*b + a]` is the fine node at local lattice position (a, b),
    a, b in {0, 1, 2}: corners, edge midpoints and the patch centre.
    `element_patch[e]` and `element_offset[e]` (0..3, = 2*dj + di) locate each
    element inside its patch.
    """
    patches: np.ndarray         # (P, 4) element indices
    lattice: np.ndarray         # (P, 9) node indices
    element_patch: np.ndarray   # (E,)
    element_offset: np.ndarray  # (E,)

    @property
    def n_patches(self) -> int:
        return int(self.patches.shape[0])

def build_macro_patches(mesh: Mesh) -> MacroPatchSet:
    m = mesh.m
    if m % 2:
        raise UnsupportedMeshError(f"macro patches need an even number of subdivisions, got m={m}")
    half = m // 2

    PI, PJ = np.meshgrid(np.arange(half), np.arange(half))
    PI, PJ = PI.ravel(), PJ.ravel()

    di = np.array([0, 1, 0, 1])
    dj = np.array([0, 0, 1, 1])
    patches = (2 * PJ[:, None] + dj) * m + (2 * PI[:, None] + di)

    a = np.tile(np.arange(3), 3)
    b = np.repeat(np.arange(3), 3)
    lattice = (2 * PJ[:, None] + b) * (m + 1) + (2 * PI[:, None] + a)

    E = np.arange(mesh.n_elements)
    ei, ej = E % m, E // m
    element_patch = (ej // 2) * half + (ei // 2)
    element_offset = 2 * (ej % 2) + (ei % 2)

    for arr in (patches, lattice, element_patch, element_offset):
        arr.setflags(write=False)
    return MacroPatchSet(patches=patches, lattice=lattice,
                         element_patch=element_patch, element_offset=element_offset)
