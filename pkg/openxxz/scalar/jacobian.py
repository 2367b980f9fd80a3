"""The matrix M_ij = Q(u_j, v) d/dv_i Lambda(u_j|v) and the Jacobian form
used for the large-u analysis."""
import numpy as np

from openxxz.config import CROSSCHECK_TOL
from openxxz.evaluation.metrics import relative_residual
from openxxz.spectral.eigenvalue import (
    as_roots,
    bethe_function_Y,
    bethe_function_partial,
    eigenvalue_lambda,
    lambda_partial_v,
    replaced,
    without,
)
from openxxz.utils.exceptions import CrossCheckFailure
from openxxz.utils.logger import logger


def _derivative_route(u_cols, v, ctx):
    return np.array(
        [[ctx.Q_set(uj, v) * lambda_partial_v(uj, v, i, ctx) for uj in u_cols] for i in range(len(v))],
        dtype=complex,
    )


def jacobian_matrix_M(u_cols, v, ctx, check=True):
    """M with one row per v_i and one column per u_j, computed by
    differentiating Lambda and cross-checked against the Y-identity."""
    u_cols, v = as_roots(u_cols), as_roots(v)
    M = _derivative_route(u_cols, v, ctx)
    if check:
        M_alt = np.array([ctx.dU(vi) for vi in v])[:, None] * bethe_route_matrix(u_cols, v, ctx)
        residual = relative_residual(M, M_alt)
        logger.debug(f"M routes agree to {residual:.3e}")
        if residual > CROSSCHECK_TOL:
            raise CrossCheckFailure(f"Routes for M disagree: relative residual {residual:.3e} > {CROSSCHECK_TOL}")
    return M


def bethe_route_matrix(u, v, ctx):
    """Y(u_j|{v-bar_i, u_j}) / Q(u_j, v_i), without the dU(v_i) factor."""
    u, v = as_roots(u), as_roots(v)
    return np.array(
        [[bethe_function_Y(uj, replaced(v, i, uj), ctx) / ctx.Q(uj, vi) for uj in u] for i, vi in enumerate(v)],
        dtype=complex,
    )


def jacobian_form_offdiagonal(u, ctx):
    """d/du_j Y(w|u)|_{w=u_i} / (Q(u_i, u-bar_i) dU(u_j))."""
    u = as_roots(u)
    N = len(u)
    out = np.empty((N, N), dtype=complex)
    for i, ui in enumerate(u):
        denominator = ctx.Q_set(ui, without(u, i))
        for j, uj in enumerate(u):
            out[i, j] = bethe_function_partial(ui, u, j, ctx) / (denominator * ctx.dU(uj))
    return out


def jacobian_form_matrix(u, v, ctx):
    """delta_ij Lambda(u_i|v) + the matrix of `jacobian_form_offdiagonal`."""
    u, v = as_roots(u), as_roots(v)
    diagonal = np.diag([eigenvalue_lambda(ui, v, ctx) for ui in u])
    return diagonal + jacobian_form_offdiagonal(u, ctx)
