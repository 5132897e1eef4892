"""ProblemSpec for u_t - (nu+i eta) Lap u + (kappa+i zeta) f(|u|^2) u - gamma u = g on a rectangle."""
from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, Optional
import numpy as np
from ..common.exceptions import InvalidArgumentError, UnsupportedError
from ..mesh import Rectangle
from ..mesh.grid import UNIT_SQUARE
from .solutions import ExactSolution

RealFunction = Callable[[np.ndarray], np.ndarray]
InitialFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]
SourceFunction = Callable[[np.ndarray, np.ndarray, float], np.ndarray]

@dataclass(frozen=True)
class ProblemSpec:
    nu: float
    eta: float
    kappa: float
    zeta: float
    gamma: float
    f: Optional[RealFunction] = None          # None means f = 0
    exact: Optional[ExactSolution] = None
    initial: Optional[InitialFunction] = None  # defaults to the exact solution at t=0
    source_g: Optional[SourceFunction] = None  # None means g = 0
    domain: Rectangle = UNIT_SQUARE
    T: float = 1.0
    name: str = "custom"

    def __post_init__(self):
        if not self.nu > 0:
            raise InvalidArgumentError(f"nu must be positive, got {self.nu}")
        if self.kappa < 0:
            raise InvalidArgumentError(f"kappa must be nonnegative, got {self.kappa}")
        if self.initial is None and self.exact is None:
            raise InvalidArgumentError("problem needs an initial datum or an exact solution")
        if not self.T > 0:
            raise InvalidArgumentError(f"final time must be positive, got {self.T}")

    @property
    def diffusion(self) -> complex:
        return complex(self.nu, self.eta)

    @property
    def reaction(self) -> complex:
        return complex(self.kappa, self.zeta)

    @property
    def is_linear(self) -> bool:
        """Nonlinear term absent: the scheme's left-hand matrix is constant in time."""
        return self.f is None or (self.kappa == 0 and self.zeta == 0)

    def u0(self, x, y):
        if self.initial is not None:
            return self.initial(x, y)
        return self.exact.value(x, y, 0.0)

    @property
    def u_exact(self) -> Optional[Callable]:
        return self.exact.value if self.exact is not None else None

    @property
    def grad_u_exact(self) -> Optional[Callable]:
        return self.exact.gradient if self.exact is not None else None

    def source(self, x, y, t):
        if self.source_g is None:
            return np.zeros(np.broadcast(x, y).shape, dtype=np.complex128)
        return self.source_g(x, y, t)

def _require_exact(spec: ProblemSpec) -> ExactSolution:
    if spec.exact is None:
        raise UnsupportedError(f"problem {spec.name!r} has no exact solution")
    return spec.exact

def manufactured_source(spec: ProblemSpec) -> SourceFunction:
    """g = u_t - (nu+i eta) Lap u + (kappa+i zeta) f(|u|^2) u - gamma u for the exact u."""
    exact = _require_exact(spec)
    diffusion, reaction, gamma, f = spec.diffusion, spec.reaction, spec.gamma, spec.f

    def g(x, y, t):
        u = exact.value(x, y, t)
        out = exact.time_derivative(x, y, t) - diffusion * exact.laplacian(x, y, t) - gamma * u
        if f is not None:
            out = out + reaction * f(np.abs(u) ** 2) * u
        return out

    return g

def eval_exact(spec: ProblemSpec, x, y, t):
    return _require_exact(spec).value(x, y, t)

def eval_exact_gradient(spec: ProblemSpec, x, y, t):
    return _require_exact(spec).gradient(x, y, t)
