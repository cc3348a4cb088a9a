"""
Dense Gaussian elimination with partial pivoting.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from linalg.banded import PIVOT_TOLERANCE
from linalg.errors import DimensionMismatchError, SingularMatrixError


def dense_solve(M: ArrayLike, rhs: ArrayLike) -> NDArray[np.float64]:
    """
    Solve ``M X = rhs`` for a vector or a block of right-hand sides.

    Args:
        M: Square ``(n, n)`` matrix
        rhs: ``(n,)`` vector or ``(n, k)`` matrix

    Returns:
        Solution with the shape of ``rhs``

    Raises:
        DimensionMismatchError: On incompatible shapes
        SingularMatrixError: If a pivot falls below 1e-14 * ||M||_inf
    """
    a = np.array(M, dtype=np.float64)
    b = np.array(rhs, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if b.shape[0] != n or b.ndim not in (1, 2):
        raise DimensionMismatchError(f"rhs of shape {b.shape} for system of size {n}")
    vector = b.ndim == 1
    if vector:
        b = b[:, None]

    tol = PIVOT_TOLERANCE * float(np.max(np.abs(a).sum(axis=1))) if n else 0.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) <= tol:
            raise SingularMatrixError(
                f"matrix is singular to working precision (pivot {k + 1} of {n})", pivot_index=k
            )
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        factors = a[k + 1 :, k] / a[k, k]
        a[k + 1 :, k:] -= np.outer(factors, a[k, k:])
        b[k + 1 :] -= np.outer(factors, b[k])

    x = np.empty_like(b)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1 :] @ x[k + 1 :]) / a[k, k]
    return x[:, 0] if vector else x
