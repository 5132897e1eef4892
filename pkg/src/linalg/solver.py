"""Sparse linear solves: splu factorization (default) or unpreconditioned BiCGStab.

The direct factor is built once and reused for every right-hand side; a
Factorization is read-only after construction.
"""
from __future__ import annotations
import time
from dataclasses import dataclass
import numpy as np
import scipy.sparse.linalg as spla
from ..common.config import SETTINGS
from ..common.exceptions import InvalidArgumentError, SolverFailureError
from ..common.logging import get_logger
from .sparse import SparseComplexMatrix

log = get_logger("linalg/solver")

METHODS = ("direct", "bicgstab")

@dataclass(frozen=True)
class SolveReport:
    iterations: int            # 0 for direct
    relative_residual: float   # ||Ax - b|| / ||b|| (absolute when b = 0)
    wall_time: float           # seconds

def _relative_residual(A: SparseComplexMatrix, x: np.ndarray, b: np.ndarray) -> float:
    r = float(np.linalg.norm(A @ x - b))
    nb = float(np.linalg.norm(b))
    return r / nb if nb > 0 else r

class Factorization:
    def __init__(self, A: SparseComplexMatrix, tol: float | None = None, method: str | None = None,
                 maxiter: int | None = None):
        if A.shape[0] != A.shape[1]:
            raise InvalidArgumentError(f"solve needs a square matrix, got {A.shape}")
        self.A = A
        self.tol = SETTINGS.SOLVER_TOL if tol is None else tol
        self.method = (method or SETTINGS.SOLVER_METHOD).lower()
        self.maxiter = maxiter or SETTINGS.SOLVER_MAXITER
        if self.method not in METHODS:
            raise InvalidArgumentError(f"unknown solver method {self.method!r}; expected one of {METHODS}")
        self._lu = None
        if self.method == "direct" and A.shape[0] > 0:
            try:
                self._lu = spla.splu(A.tocsc())
            except RuntimeError as e:  # exactly singular
                raise SolverFailureError(f"factorization failed: {e}", residual=float("inf")) from e

    @property
    def n(self) -> int:
        return int(self.A.shape[0])

    def solve(self, b: np.ndarray) -> tuple[np.ndarray, SolveReport]:
        b = np.asarray(b, dtype=np.complex128)
        if b.shape != (self.n,):
            raise InvalidArgumentError(f"right-hand side of shape {b.shape} for a system of size {self.n}")
        t0 = time.perf_counter()
        iterations = 0
        if self.n == 0:
            x = b.copy()
        elif self.method == "direct":
            x = self._lu.solve(b)
        else:
            counter = {"n": 0}

            def _count(_xk):
                counter["n"] += 1

            # stop at tol/10 so the true residual clears tol
            x, info = spla.bicgstab(self.A, b, rtol=0.1 * self.tol, atol=0.0, maxiter=self.maxiter,
                                    callback=_count)
            iterations = counter["n"]
            if info < 0:
                raise SolverFailureError("BiCGStab breakdown", residual=_relative_residual(self.A, x, b))
        res = _relative_residual(self.A, x, b) if self.n else 0.0
        report = SolveReport(iterations=iterations, relative_residual=res, wall_time=time.perf_counter() - t0)
        if not np.isfinite(res) or res > self.tol:
            raise SolverFailureError(f"{self.method} solve missed tolerance {self.tol:.1e}", residual=res)
        return x, report

def factorize(A: SparseComplexMatrix, tol: float | None = None, method: str | None = None) -> Factorization:
    return Factorization(A, tol=tol, method=method)

def solve(A: SparseComplexMatrix, b: np.ndarray, tol: float | None = None,
          method: str | None = None) -> tuple[np.ndarray, SolveReport]:
    return Factorization(A, tol=tol, method=method).solve(b)
