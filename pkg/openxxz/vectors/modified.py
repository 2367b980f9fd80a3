"""Modified creation and annihilation operators B(u, m), C(u, m).

Both are fixed linear combinations of the double-row operators
A(u), B(u), C(u), D(u); the combination is exposed through
`modified_coefficients` so callers can read it off directly.
"""
import numpy as np

from openxxz.operators.monodromy import check_crossing, double_row_operators
from openxxz.params.boundary import modified_constants, require_gamma
from openxxz.utils.logger import logger


def _mixing_weight(u, q):
    """q u (u^2 - u^-2) / (q u^2 - q^-1 u^-2), the weight of A(u)."""
    return q * u * (u ** 2 - u ** -2) / check_crossing(u, q)


def modified_coefficients(u, midx, m, side="creation", constants=None):
    """Coefficients of A, B, C, D in B(u, midx) (side="creation") or
    C(u, midx) (side="annihilation")."""
    constants = constants or modified_constants(m, check_range=False)
    q = m.q
    if side == "creation":
        prefactor = q * u / require_gamma(constants, midx + 1)
        shift = constants.beta * q ** midx
    elif side == "annihilation":
        prefactor = -q * u / require_gamma(constants, midx - 1)
        shift = constants.alpha * q ** (-midx)
    else:
        raise ValueError(f"Unknown side '{side}'. Available: ['creation', 'annihilation']")

    return {
        "A": prefactor * shift * _mixing_weight(u, q),
        "B": prefactor,
        "C": -prefactor * shift ** 2,
        "D": -prefactor * shift / u,
    }


def _assemble(u, midx, m, side, dtype, constants):
    coefficients = modified_coefficients(u, midx, m, side, constants)
    ops = double_row_operators(u, m, dtype)
    return (
        dtype(coefficients["A"]) * ops.a
        + dtype(coefficients["B"]) * ops.b
        + dtype(coefficients["C"]) * ops.c
        + dtype(coefficients["D"]) * ops.d
    )


def modified_creation(u, midx, m, dtype=complex, constants=None):
    return _assemble(u, midx, m, "creation", dtype, constants)


def modified_annihilation(u, midx, m, dtype=complex, constants=None):
    return _assemble(u, midx, m, "annihilation", dtype, constants)


def modified_operators(u, midx, m, dtype=complex):
    constants = modified_constants(m, check_range=False)
    return {
        "Bmod": modified_creation(u, midx, m, dtype, constants),
        "Cmod": modified_annihilation(u, midx, m, dtype, constants),
    }


def modified_creation_asymptotics(u, midx, m, ket_N, dtype=complex):
    """Leading large-u coefficient of B(u, m)|N>, the measured/predicted
    ratio of its projection on |N>, and the relative vector residual."""
    b = m.boundary
    q, N, d = m.q, m.N, m.q - 1 / m.q
    constants = modified_constants(m, check_range=False)
    beta = constants.beta
    gamma = require_gamma(constants, midx + 1)

    coefficient = (
        (q * u ** 2 / d ** 2) ** N * q * u ** 3 * b.tau ** 2
        * (1 + 1j * b.mu_tilde * b.tau_tilde / (b.mu * b.tau) * q ** (-N + midx) * beta)
        * (1 + 1j * b.mu * b.tau_tilde / (b.mu_tilde * b.tau) * q ** (N + midx) * beta)
        / gamma
    )
    ket = np.asarray(ket_N, dtype=dtype)
    measured = (modified_creation(u, midx, m, dtype, constants) @ ket).astype(complex)
    predicted = complex(coefficient) * ket.astype(complex)

    ratio = complex(np.vdot(ket.astype(complex), measured) / np.vdot(ket.astype(complex), predicted))
    residual = float(np.linalg.norm(measured - predicted) / np.linalg.norm(predicted))
    logger.info(f"B(u,{midx})|N> at |u|={abs(u):.1e}: ratio {ratio:.12g}, residual {residual:.3e}")
    return {"coefficient": complex(coefficient), "ratio": ratio, "residual": residual}
