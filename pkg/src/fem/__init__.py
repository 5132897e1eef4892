"""Bilinear (Q1) reference element, Gauss quadrature and global assembly."""
from .basis import basis_eval, reference_values, reference_gradients
from .quadrature import QuadratureRule, ElementQuadrature, gauss_rule
from .element import ElementMatrices, element_matrices
from .assembly import (
    assemble_mass,
    assemble_stiffness,
    assemble_function_load,
    assemble_nonlinear_load,
    assemble_weighted_mass,
    nodal_values,
    values_at_quadrature,
    scatter_vector,
)

__all__ = [
    "basis_eval", "reference_values", "reference_gradients",
    "QuadratureRule", "ElementQuadrature", "gauss_rule",
    "ElementMatrices", "element_matrices",
    "assemble_mass", "assemble_stiffness", "assemble_function_load",
    "assemble_nonlinear_load", "assemble_weighted_mass",
    "nodal_values", "values_at_quadrature", "scatter_vector",
]
