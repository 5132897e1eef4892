"""Environment & configuration loader (tidy, single source of truth)."""
import os
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv(override=True)

def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")

@dataclass(frozen=True)
class Settings:
    # Logging
    GLE_LOG_LEVEL: str = os.getenv("GLE_LOG_LEVEL", "INFO").upper()
    GLE_LOG_FILE: bool = _flag("GLE_LOG_FILE", "true")

    # Linear solver: "direct" (splu, default) or "bicgstab"
    SOLVER_METHOD: str = os.getenv("SOLVER_METHOD", "direct").lower()
    SOLVER_TOL: float = float(os.getenv("SOLVER_TOL", "1e-10"))
    SOLVER_MAXITER: int = int(os.getenv("SOLVER_MAXITER", "5000"))

    # Gauss points per axis for source, nonlinear and error integrals
    QUAD_POINTS: int = int(os.getenv("QUAD_POINTS", "3"))

    # Source time placement: "midpoint" (g at t_{n-1/2}) or "average"
    SOURCE_RULE: str = os.getenv("SOURCE_RULE", "midpoint").lower()

    # Study orchestration
    STUDY_WORKERS: int = int(os.getenv("STUDY_WORKERS", "1"))
    MANIFEST_ENABLE: bool = _flag("MANIFEST_ENABLE", "true")

SETTINGS = Settings()
