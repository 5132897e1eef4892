"""Global constants used across the solver and the study CLI."""

# Study defaults (uniform meshes M x M on the unit square, tau = h)
DEFAULT_SIZES: tuple[int, ...] = (10, 20, 40, 80)
DEFAULT_SNAPSHOTS: tuple[float, ...] = (0.25, 0.5, 0.75, 1.0)
DEFAULT_STABILITY_K: tuple[int, ...] = (1, 5, 10, 20)
DEFAULT_PROBLEM: str = "example1"

# Snapshot-grid matching: |t/tau - round(t/tau)| below this counts as on-grid
GRID_TOL: float = 1e-9

# Paths (relative to repo root)
DATA_DIR = "data"
RESULTS_DIR = f"{DATA_DIR}/results"
MANIFESTS_DIR = f"{DATA_DIR}/manifests"
LOGS_DIR = "logs"
REFERENCE_TABLES_YAML = "docs/REFERENCE_TABLES.yaml"

# CLI exit codes
EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_IO = 4
