"""Error norms against exact solutions and observed convergence orders."""
from .norms import h1_error, l2_error, superclose_error, q1_h1_norm
from .rates import convergence_order

__all__ = ["h1_error", "l2_error", "superclose_error", "q1_h1_norm", "convergence_order"]
