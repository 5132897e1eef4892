"""State and configuration types for the time stepper."""
from __future__ import annotations
from dataclasses import dataclass, field
import numpy as np
from ..common.config import SETTINGS
from ..common.exceptions import InvalidArgumentError
from ..fem import QuadratureRule, gauss_rule

@dataclass(frozen=True, eq=False)
class FemField:
    """Coefficients of a V_h0 member over the interior dofs; boundary values are implicitly zero."""
    coefficients: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=np.complex128)
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)

    @property
    def n_dofs(self) -> int:
        return int(self.coefficients.shape[0])

    @classmethod
    def zeros(cls, n: int, t: float = 0.0) -> "FemField":
        return cls(np.zeros(n, dtype=np.complex128), t)

SOURCE_RULES = ("midpoint", "average")

@dataclass(frozen=True)
class StepperConfig:
    tau: float
    n_steps: int
    rule: QuadratureRule = field(default_factory=lambda: gauss_rule(SETTINGS.QUAD_POINTS))
    solver_tol: float = SETTINGS.SOLVER_TOL
    solver_method: str = SETTINGS.SOLVER_METHOD
    source_rule: str = SETTINGS.SOURCE_RULE

    def __post_init__(self):
        if not self.tau > 0:
            raise InvalidArgumentError(f"time step must be positive, got {self.tau}")
        if int(self.n_steps) != self.n_steps or self.n_steps < 1:
            raise InvalidArgumentError(f"need at least one time step, got {self.n_steps}")
        if self.source_rule not in SOURCE_RULES:
            raise InvalidArgumentError(f"source rule must be one of {SOURCE_RULES}, got {self.source_rule!r}")

    @property
    def T(self) -> float:
        return self.n_steps * self.tau

    @classmethod
    def from_final_time(cls, T: float, tau: float, **kwargs) -> "StepperConfig":
        n = round(T / tau)
        if n < 1 or abs(n * tau - T) > 1e-9 * max(1.0, T):
            raise InvalidArgumentError(f"final time {T} is not a multiple of tau={tau}")
        return cls(tau=tau, n_steps=int(n), **kwargs)
