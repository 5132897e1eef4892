from __future__ import annotations
from typing import List, Literal, Optional
from pydantic import BaseModel, Field, ConfigDict, model_validator
from ..common.config import SETTINGS
from ..common.constants import DEFAULT_PROBLEM, DEFAULT_SIZES, DEFAULT_SNAPSHOTS, DEFAULT_STABILITY_K

class StudyConfig(BaseModel):
    study: Literal["convergence", "stability"] = "convergence"
    problem: str = DEFAULT_PROBLEM
    sizes: List[int] = Field(default_factory=lambda: list(DEFAULT_SIZES))
    tau_rule: Literal["h", "kh"] = "h"
    # "M": M elements per axis. "M/2": M/2 elements per axis, tau still from 1/M.
    elements_per_axis: Literal["M", "M/2"] = "M"
    k: List[float] = Field(default_factory=lambda: [1.0])
    t_final: Optional[float] = None
    snapshots: List[float] = Field(default_factory=lambda: list(DEFAULT_SNAPSHOTS))
    out: Optional[str] = None
    solver_tol: float = SETTINGS.SOLVER_TOL
    quad: int = SETTINGS.QUAD_POINTS
    solver: Literal["direct", "bicgstab"] = SETTINGS.SOLVER_METHOD  # type: ignore[assignment]
    source_rule: Literal["midpoint", "average"] = SETTINGS.SOURCE_RULE  # type: ignore[assignment]
    workers: int = SETTINGS.STUDY_WORKERS
    postprocess: bool = True
    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _check(self) -> "StudyConfig":
        if not self.sizes or any(m < 1 for m in self.sizes):
            raise ValueError(f"mesh sizes must be positive integers, got {self.sizes}")
        if self.elements_per_axis == "M/2" and any(m % 2 for m in self.sizes):
            raise ValueError(f"elements_per_axis = M/2 needs even sizes, got {self.sizes}")
        if self.postprocess and any(m % 2 for m in self.element_counts()):
            raise ValueError(f"postprocessing needs an even number of elements per axis, "
                             f"got {self.element_counts()} for sizes {self.sizes}")
        if not self.snapshots or any(t <= 0 for t in self.snapshots):
            raise ValueError(f"snapshot times must be positive, got {self.snapshots}")
        if self.study == "stability" and "k" not in self.model_fields_set:
            self.k = [float(k) for k in DEFAULT_STABILITY_K]
        if not self.k or any(k <= 0 for k in self.k):
            raise ValueError(f"k values must be positive, got {self.k}")
        if self.t_final is None:
            self.t_final = max(self.snapshots)
        if self.t_final < max(self.snapshots):
            raise ValueError(f"t_final={self.t_final} is before the last snapshot {max(self.snapshots)}")
        if self.study == "stability" and len(self.sizes) != 1:
            raise ValueError(f"the stability study runs on one mesh size, got {self.sizes}")
        if self.study == "convergence" and self.tau_rule == "kh" and len(self.k) != 1:
            raise ValueError(f"tau rule kh takes a single k, got {self.k}")
        if self.solver_tol <= 0 or self.quad < 1 or self.workers < 1:
            raise ValueError("solver_tol, quad and workers must be positive")
        return self

    def elements(self, M: int) -> int:
        """Elements per axis for study size M."""
        return M if self.elements_per_axis == "M" else M // 2

    def element_counts(self) -> List[int]:
        return [self.elements(M) for M in self.sizes]

class ErrorRow(BaseModel):
    t: float
    M: int
    tau: float
    k: float
    h1_error: float
    h1_order: Optional[float] = None
    superclose: float
    superclose_order: Optional[float] = None
    postprocessed: Optional[float] = None
    post_order: Optional[float] = None
    model_config = ConfigDict(extra="forbid")

class ErrorReport(BaseModel):
    study: str = "convergence"
    problem: str = DEFAULT_PROBLEM
    rows: List[ErrorRow] = Field(default_factory=list)

    def sorted_rows(self) -> List[ErrorRow]:
        return sorted(self.rows, key=lambda r: (r.t, r.M, r.k))
