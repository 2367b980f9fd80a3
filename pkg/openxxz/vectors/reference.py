"""Reference states |N> and <N| of the modified Bethe ansatz."""
import numpy as np

from openxxz.operators.local import kron_all
from openxxz.utils.exceptions import ZeroParameter


def _local_amplitudes(m):
    b = m.boundary
    zeros = b.zero_fields(("mu_tilde", "tau_tilde", "tau"))
    if zeros:
        raise ZeroParameter(f"Reference states need nonzero {zeros}")
    q, N = m.q, m.N
    ket = [1j * q ** (N - j) * b.mu * b.tau / (b.mu_tilde * b.tau_tilde * xj) for j, xj in enumerate(m.x, start=1)]
    bra = [1j * q ** (N - j) * b.mu * b.tau_tilde * xj / (b.mu_tilde * b.tau) for j, xj in enumerate(m.x, start=1)]
    return ket, bra


def reference_states(m, dtype=complex):
    """{"ket_N": column vector, "bra_N": row vector}, both of length 2^N."""
    ket, bra = _local_amplitudes(m)
    return {
        "ket_N": kron_all([np.array([a, 1], dtype=dtype) for a in ket]),
        "bra_N": kron_all([np.array([a, 1], dtype=dtype) for a in bra]),
    }


def reference_overlap(m):
    """<N|N> = prod_j (1 - q^{2(N-j)} mu^2 / mu_tilde^2)."""
    b = m.boundary
    out = 1.0 + 0j
    for j in range(1, m.N + 1):
        out *= 1 - m.q ** (2 * (m.N - j)) * b.mu ** 2 / b.mu_tilde ** 2
    return out
