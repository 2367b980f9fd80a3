import numpy as np
import scipy.linalg

from openxxz.operators.local import SIGMA_MINUS, SIGMA_PLUS, SIGMA_X, SIGMA_Y, SIGMA_Z, embed
from openxxz.operators.transfer import transfer_matrix, transfer_matrix_derivative
from openxxz.params.boundary import derive_hamiltonian_couplings
from openxxz.utils.exceptions import NonInvertibleTransfer
from openxxz.utils.logger import logger

# t(1) is rejected as singular above this condition number
TRANSFER_CONDITION_LIMIT = 1e12


def anisotropy(q):
    return (q + 1 / q) / 2


def hamiltonian_direct(m):
    """Open XXZ Hamiltonian with boundary fields on sites 1 and N."""
    if m.N < 2:
        raise ValueError(f"hamiltonian_direct requires N >= 2, got N={m.N}")
    c = derive_hamiltonian_couplings(m)
    N, delta = m.N, anisotropy(m.q)

    H = (
        c.epsilon * embed(SIGMA_Z, 0, N)
        + c.kappa_minus * embed(SIGMA_MINUS, 0, N)
        + c.kappa_plus * embed(SIGMA_PLUS, 0, N)
        + c.nu * embed(SIGMA_Z, N - 1, N)
        + c.tau_minus * embed(SIGMA_MINUS, N - 1, N)
        + c.tau_plus * embed(SIGMA_PLUS, N - 1, N)
    )
    for k in range(N - 1):
        H = H + embed(SIGMA_X, k, N) @ embed(SIGMA_X, k + 1, N)
        H = H + embed(SIGMA_Y, k, N) @ embed(SIGMA_Y, k + 1, N)
        H = H + delta * embed(SIGMA_Z, k, N) @ embed(SIGMA_Z, k + 1, N)
    return H


def hamiltonian_from_transfer(m):
    """(q - q^-1)/2 t'(1) t(1)^-1 minus the constant shift, at the homogeneous point."""
    if m.mode != "homogeneous":
        raise ValueError("hamiltonian_from_transfer requires homogeneous mode (x_i = 1)")

    q, N = m.q, m.N
    t1 = transfer_matrix(1.0, m)
    dt1 = transfer_matrix_derivative(1.0, m)

    cond = float(np.linalg.cond(t1))
    logger.info(f"cond(t(1)) = {cond:.3e}")
    if not np.isfinite(cond) or cond > TRANSFER_CONDITION_LIMIT:
        raise NonInvertibleTransfer(f"t(1) is numerically singular (cond={cond:.3e})")

    # dt1 @ inv(t1) via a solve with the transposed system
    log_derivative = scipy.linalg.solve(t1.T, dt1.T).T
    shift = N * (q + 1 / q) / 2 + (q - 1 / q) ** 2 / (2 * (q + 1 / q))
    return (q - 1 / q) / 2 * log_derivative - shift * np.eye(2 ** N, dtype=complex)
