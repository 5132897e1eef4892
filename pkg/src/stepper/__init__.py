"""Linearized Crank-Nicolson Galerkin time stepping."""
from .field import FemField, StepperConfig
from .scheme import CrankNicolsonStepper, initial_field, run, snapshot_steps

__all__ = ["FemField", "StepperConfig", "CrankNicolsonStepper", "initial_field", "run", "snapshot_steps"]
