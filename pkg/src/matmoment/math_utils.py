# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Small dense linear algebra helpers shared across the package.

All helpers accept stacks of matrices; the last two axes are the matrix axes.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import linalg

from .base import MomentError
from .constants import CONDITION_LIMIT, SQRT_FLOOR

__all__ = (
    "CARRAY",
    "adjoint",
    "hermitianize",
    "hermitian_sqrt",
    "hermitian_inv_sqrt",
    "relative_residual",
    "spectral_norm",
    "min_eigenvalue",
    "max_eigenvalue",
    "right_divide",
    "left_divide",
)

CARRAY = NDArray[np.complex128]


def adjoint(M: ArrayLike) -> CARRAY:
    """Conjugate transpose over the last two axes.

    Args:
        M (ArrayLike): Matrix or stack of matrices

    Returns:
        CARRAY: The adjoint
    """
    arr = np.asarray(M, dtype=complex)
    return np.conj(np.swapaxes(arr, -1, -2))


def hermitianize(M: ArrayLike) -> CARRAY:
    """Remove the anti-Hermitian rounding part of a matrix."""
    arr = np.asarray(M, dtype=complex)
    return (arr + adjoint(arr)) / 2


def _hermitian_power(M: ArrayLike, power: float, floor: float) -> CARRAY:
    arr = hermitianize(M)
    if arr.ndim != 2:
        raise ValueError("Hermitian powers are taken one matrix at a time")
    w, v = linalg.eigh(arr)
    trace = max(float(np.sum(np.abs(w))), np.finfo(float).tiny)
    w = np.maximum(w, floor * trace)
    result: CARRAY = (v * w**power) @ adjoint(v)
    return hermitianize(result)


def hermitian_sqrt(M: ArrayLike, floor: float = SQRT_FLOOR) -> CARRAY:
    """Hermitian square root by eigendecomposition.

    Eigenvalues are clipped from below at ``floor`` times the trace so that the
    result stays Hermitian and positive.

    Args:
        M (ArrayLike): Hermitian positive (semi)definite matrix
        floor (float, optional): Relative eigenvalue floor. Defaults to SQRT_FLOOR.

    Returns:
        CARRAY: M^(1/2)
    """
    return _hermitian_power(M, 0.5, floor)


def hermitian_inv_sqrt(M: ArrayLike, floor: float = SQRT_FLOOR) -> CARRAY:
    """Hermitian inverse square root by eigendecomposition.

    Args:
        M (ArrayLike): Hermitian positive definite matrix
        floor (float, optional): Relative eigenvalue floor. Defaults to SQRT_FLOOR.

    Returns:
        CARRAY: M^(-1/2)
    """
    return _hermitian_power(M, -0.5, floor)


def relative_residual(lhs: ArrayLike, rhs: ArrayLike) -> float:
    """Relative Frobenius residual ||lhs - rhs|| / max(1, ||lhs||, ||rhs||).

    Args:
        lhs (ArrayLike): Left hand side
        rhs (ArrayLike): Right hand side

    Returns:
        float: The residual
    """
    a = np.asarray(lhs, dtype=complex)
    b = np.asarray(rhs, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)), float(np.linalg.norm(b)))
    return float(np.linalg.norm(a - b)) / scale


def spectral_norm(M: ArrayLike) -> NDArray[np.float64]:
    """Largest singular value of each matrix in a stack."""
    arr = np.asarray(M, dtype=complex)
    return np.linalg.svd(arr, compute_uv=False)[..., 0]


def min_eigenvalue(M: ArrayLike) -> NDArray[np.float64]:
    """Smallest eigenvalue of the Hermitian part of each matrix in a stack."""
    return np.linalg.eigvalsh(hermitianize(M))[..., 0]


def max_eigenvalue(M: ArrayLike) -> NDArray[np.float64]:
    """Largest eigenvalue of the Hermitian part of each matrix in a stack."""
    return np.linalg.eigvalsh(hermitianize(M))[..., -1]


def _check_condition(
    den: CARRAY, error: type[MomentError], what: str, limit: float
) -> None:
    cond = np.linalg.cond(den)
    bad = ~np.isfinite(cond) | (cond > limit)
    if np.any(bad):
        worst = float(np.max(np.where(np.isfinite(cond), cond, np.inf)))
        raise error(f"{what} is numerically singular (condition number {worst:.3e})")


def right_divide(
    num: ArrayLike,
    den: ArrayLike,
    error: type[MomentError] = MomentError,
    what: str = "denominator",
    limit: float = CONDITION_LIMIT,
) -> CARRAY:
    """Compute num @ inv(den) for stacks without forming the inverse.

    Args:
        num (ArrayLike): Numerators, shape (..., r, p)
        den (ArrayLike): Square denominators, shape (..., p, p)
        error (type[MomentError], optional): Raised when ``den`` is singular.
        what (str, optional): Name used in the error message.
        limit (float, optional): Largest acceptable condition number.

    Returns:
        CARRAY: The quotients
    """
    n = np.asarray(num, dtype=complex)
    d = np.asarray(den, dtype=complex)
    _check_condition(d, error, what, limit)
    sol = np.linalg.solve(np.swapaxes(d, -1, -2), np.swapaxes(n, -1, -2))
    return np.swapaxes(sol, -1, -2)


def left_divide(
    den: ArrayLike,
    num: ArrayLike,
    error: type[MomentError] = MomentError,
    what: str = "matrix",
    limit: float = CONDITION_LIMIT,
) -> CARRAY:
    """Compute inv(den) @ num for stacks, with a conditioning check."""
    n = np.asarray(num, dtype=complex)
    d = np.asarray(den, dtype=complex)
    _check_condition(d, error, what, limit)
    return np.linalg.solve(d, n)
