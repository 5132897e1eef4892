"""Uniform rectangular meshes, interior dof numbering and 2x2 macro patches."""
from .grid import Rectangle, Mesh, build_uniform_mesh
from .dofs import DofMap, build_dof_map
from .patches import MacroPatchSet, build_macro_patches

__all__ = [
    "Rectangle", "Mesh", "build_uniform_mesh",
    "DofMap", "build_dof_map",
    "MacroPatchSet", "build_macro_patches",
]
