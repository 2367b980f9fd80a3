import numpy as np

from openxxz.config import GENERICITY_TOL
from openxxz.operators.local import embed_aux_site
from openxxz.utils.exceptions import SingularParameter


def _check(u, q):
    if u == 0:
        raise SingularParameter("R-matrix needs u != 0")
    if abs(q - 1 / q) <= GENERICITY_TOL * (abs(q) + abs(1 / q)):
        raise SingularParameter(f"q - 1/q vanishes at q = {q}")


def r_weights(u, q, dtype=complex):
    u, q = dtype(u), dtype(q)
    d = q - 1 / q
    return (q * u - 1 / (q * u)) / d, (u - 1 / u) / d, dtype(1)


def r_weight_derivatives(u, q, dtype=complex):
    u, q = dtype(u), dtype(q)
    d = q - 1 / q
    return (q + 1 / (q * u * u)) / d, (1 + 1 / (u * u)) / d, dtype(0)


def _assemble(a, b, c, dtype):
    R = np.zeros((4, 4), dtype=dtype)
    R[0, 0] = R[3, 3] = a
    R[1, 1] = R[2, 2] = b
    R[1, 2] = R[2, 1] = c
    return R


def r_matrix(u, q, dtype=complex):
    _check(u, q)
    return _assemble(*r_weights(u, q, dtype), dtype)


def r_matrix_derivative(u, q, dtype=complex):
    _check(u, q)
    return _assemble(*r_weight_derivatives(u, q, dtype), dtype)


def r_aux_site(u, q, site, N, dtype=complex, derivative=False):
    """R_{a,site}(u) on aux x site_1 x ... x site_N."""
    R = r_matrix_derivative(u, q, dtype) if derivative else r_matrix(u, q, dtype)
    return embed_aux_site(R, site, N, dtype)
