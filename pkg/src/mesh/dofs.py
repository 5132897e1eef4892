"""Interior-node numbering for V_h0 (homogeneous Dirichlet boundary)."""
from __future__ import annotations
from dataclasses import dataclass
import numpy as np
from .grid import Mesh

@dataclass(frozen=True, eq=False)
class DofMap:
    node_to_dof: np.ndarray  # -1 on boundary nodes
    dof_to_node: np.ndarray

    @property
    def n_dofs(self) -> int:
        return int(self.dof_to_node.shape[0])

    def element_dofs(self, mesh: Mesh) -> np.ndarray:
        """Dof index of each element corner, -1 where the corner is on the boundary."""
        return self.node_to_dof[mesh.elements]

def build_dof_map(mesh: Mesh) -> DofMap:
    # node order is already lexicographic by (y, x)
    dof_to_node = np.flatnonzero(~mesh.boundary_mask)
    node_to_dof = np.full(mesh.n_nodes, -1, dtype=np.int64)
    node_to_dof[dof_to_node] = np.arange(dof_to_node.shape[0])
    dof_to_node.setflags(write=False)
    node_to_dof.setflags(write=False)
    return DofMap(node_to_dof=node_to_dof, dof_to_node=dof_to_node)
