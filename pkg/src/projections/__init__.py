"""Nodal interpolation, Ritz projection and 2h biquadratic postprocessing."""
from .functions import Q1Function, Q2PatchFunction
from .operators import interpolate, ritz_project, postprocess

__all__ = ["Q1Function", "Q2PatchFunction", "interpolate", "ritz_project", "postprocess"]
