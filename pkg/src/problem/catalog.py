"""Named problem instances selectable from the study CLI."""
from __future__ import annotations
from dataclasses import replace
from typing import Callable, Dict
import numpy as np
from ..common.exceptions import ConfigError
from .solutions import PlaneWaveSolution, StandingModeSolution
from .spec import ProblemSpec, manufactured_source

def cubic_nonlinearity(s: np.ndarray) -> np.ndarray:
    """f(s) = s, i.e. the |u|^2 u reaction."""
    return s

def example1_spec(T: float = 1.0) -> ProblemSpec:
    """u_t - (1+i) Lap u + (1+i)|u|^2 u - u = g on the unit square, plane-wave exact solution."""
    spec = ProblemSpec(nu=1.0, eta=1.0, kappa=1.0, zeta=1.0, gamma=1.0,
                       f=cubic_nonlinearity, exact=PlaneWaveSolution(), T=T, name="example1")
    return replace(spec, source_g=manufactured_source(spec))

def linear_mode_spec(T: float = 1.0, nu: float = 1.0, eta: float = 0.5, gamma: float = 0.25) -> ProblemSpec:
    """Homogeneous linear problem (kappa = zeta = 0) with an exact decaying standing mode."""
    mode = StandingModeSolution(lam=0j)
    lam = -complex(nu, eta) * mode.eigenvalue + gamma
    return ProblemSpec(nu=nu, eta=eta, kappa=0.0, zeta=0.0, gamma=gamma, f=None,
                       exact=StandingModeSolution(lam=lam), T=T, name="linear_mode")

PROBLEMS: Dict[str, Callable[..., ProblemSpec]] = {
    "example1": example1_spec,
    "linear_mode": linear_mode_spec,
}

def get_problem(name: str, T: float = 1.0) -> ProblemSpec:
    try:
        factory = PROBLEMS[name]
    except KeyError:
        raise ConfigError(f"unknown problem {name!r}; available: {', '.join(sorted(PROBLEMS))}") from None
    return factory(T=T)
