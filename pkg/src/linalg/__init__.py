"""Complex CSR matrices and the per-step linear solver."""
from .sparse import SparseComplexMatrix, as_csr, axpy_matrix, matvec
from .solver import SolveReport, Factorization, factorize, solve

__all__ = [
    "SparseComplexMatrix", "as_csr", "axpy_matrix", "matvec",
    "SolveReport", "Factorization", "factorize", "solve",
]
