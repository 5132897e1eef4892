import math
from ..common.exceptions import InvalidArgumentError

def convergence_order(e_coarse: float, e_fine: float, ratio: float = 2.0) -> float:
    """Observed order log_ratio(e_coarse / e_fine) for a mesh refined by `ratio`."""
    if not (e_coarse > 0 and e_fine > 0):
        raise InvalidArgumentError(f"errors must be positive, got {e_coarse} and {e_fine}")
    if not ratio > 1:
        raise InvalidArgumentError(f"refinement ratio must exceed 1, got {ratio}")
    return math.log(e_coarse / e_fine) / math.log(ratio)
