"""CSR storage helpers. SparseComplexMatrix is scipy's csr_matrix in canonical form."""
from __future__ import annotations
import numpy as np
import scipy.sparse as sp
from ..common.exceptions import InvalidArgumentError

SparseComplexMatrix = sp.csr_matrix

def as_csr(A) -> SparseComplexMatrix:
    """complex128 CSR with sorted, duplicate-free column indices per row."""
    out = sp.csr_matrix(A, dtype=np.complex128)
    out.sum_duplicates()  # also sorts indices
    return out

def axpy_matrix(alpha: complex, A: SparseComplexMatrix, beta: complex, B: SparseComplexMatrix) -> SparseComplexMatrix:
    """alpha*A + beta*B on the merged sparsity pattern."""
    if A.shape != B.shape:
        raise InvalidArgumentError(f"matrix shapes differ: {A.shape} vs {B.shape}")
    return as_csr(alpha * A + beta * B)

def matvec(A: SparseComplexMatrix, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x)
    if x.ndim != 1 or A.shape[1] != x.shape[0]:
        raise InvalidArgumentError(f"cannot apply {A.shape} matrix to vector of shape {x.shape}")
    return A @ x
