"""Residual metrics shared by every verification check."""
import numpy as np
import scipy.linalg


def frobenius(matrix):
    return float(np.linalg.norm(np.asarray(matrix, dtype=complex)))


def relative_residual(lhs, rhs, *factors):
    """||lhs - rhs||_F relative to the product of the factor norms, or to the
    larger side when no factors are given."""
    diff = frobenius(np.asarray(lhs) - np.asarray(rhs))
    if factors:
        scale = float(np.prod([frobenius(f) for f in factors]))
    else:
        scale = max(frobenius(lhs), frobenius(rhs))
    if scale == 0:
        return diff
    return diff / scale


def relative_error(a, b):
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return float(abs(a - b) / scale)


def lu_det(matrix):
    """Determinant through LU with partial pivoting."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape == (0, 0):
        return complex(1.0)
    lu, piv = scipy.linalg.lu_factor(matrix, check_finite=True)
    swaps = np.count_nonzero(piv != np.arange(len(piv)))
    sign = -1.0 if swaps % 2 else 1.0
    return complex(sign * np.prod(np.diag(lu)))


def condition(matrix):
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.size == 0:
        return 1.0
    return float(np.linalg.cond(matrix))


def column_scaled_det(matrix):
    """|det| relative to the product over columns of the largest entry."""
    matrix = np.asarray(matrix, dtype=complex)
    scale = np.prod(np.max(np.abs(matrix), axis=0))
    if scale == 0:
        return 0.0
    return float(abs(lu_det(matrix)) / scale)
