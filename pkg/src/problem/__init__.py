"""PDE instances: parameters, nonlinearity, exact solutions and manufactured sources."""
from .spec import ProblemSpec, manufactured_source, eval_exact, eval_exact_gradient
from .solutions import ExactSolution, PlaneWaveSolution, StandingModeSolution
from .catalog import example1_spec, linear_mode_spec, get_problem, PROBLEMS

__all__ = [
    "ProblemSpec", "manufactured_source", "eval_exact", "eval_exact_gradient",
    "ExactSolution", "PlaneWaveSolution", "StandingModeSolution",
    "example1_spec", "linear_mode_spec", "get_problem", "PROBLEMS",
]
