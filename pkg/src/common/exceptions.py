"""Exception hierarchy shared by the solver library and the study CLI."""
from __future__ import annotations


class GLEError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(GLEError, ValueError):
    pass


class UnsupportedMeshError(GLEError):
    """Mesh does not support the requested operation (e.g. odd m for macro patches)."""


class UnsupportedError(GLEError):
    """Operation needs data the problem does not provide (e.g. no exact solution)."""


class ConfigError(GLEError):
    pass


class SolverFailureError(GLEError):
    """Linear solve did not reach the requested tolerance."""

    def __init__(self, message: str, residual: float, step: int | None = None,
                 mesh_size: int | None = None):
        super().__init__(message)
        self.residual = residual
        self.step = step
        self.mesh_size = mesh_size

    def __str__(self) -> str:
        where = []
        if self.mesh_size is not None:
            where.append(f"M={self.mesh_size}")
        if self.step is not None:
            where.append(f"step={self.step}")
        suffix = f" [{', '.join(where)}]" if where else ""
        return f"{self.args[0]} (relative residual {self.residual:.3e}){suffix}"


class ReportIOError(GLEError):
    def __init__(self, message: str, path: str):
        super().__init__(f"{message}: {path}")
        self.path = path
