import numpy as np

from openxxz.params.boundary import derive_sklyanin_entries


def k_minus(u, m, dtype=complex):
    s = derive_sklyanin_entries(m.boundary)
    sq = m.boundary.squares()
    u = dtype(u)
    off = u ** 2 - u ** -2
    return np.array(
        [
            [s.nu_minus * u + s.nu_plus / u, sq["tau"] * off],
            [sq["tau_tilde"] * off, s.nu_minus / u + s.nu_plus * u],
        ],
        dtype=dtype,
    )


def k_plus(u, m, dtype=complex):
    s = derive_sklyanin_entries(m.boundary)
    sq = m.boundary.squares()
    u, q = dtype(u), dtype(m.q)
    off = q ** 2 * u ** 2 - q ** -2 * u ** -2
    return np.array(
        [
            [s.eps_plus * q * u + s.eps_minus / (q * u), sq["kappa_tilde"] * off],
            [sq["kappa"] * off, s.eps_minus * q * u + s.eps_plus / (q * u)],
        ],
        dtype=dtype,
    )


def k_minus_derivative(u, m, dtype=complex):
    s = derive_sklyanin_entries(m.boundary)
    sq = m.boundary.squares()
    u = dtype(u)
    off = 2 * u + 2 * u ** -3
    return np.array(
        [
            [s.nu_minus - s.nu_plus / u ** 2, sq["tau"] * off],
            [sq["tau_tilde"] * off, -s.nu_minus / u ** 2 + s.nu_plus],
        ],
        dtype=dtype,
    )


def k_plus_derivative(u, m, dtype=complex):
    s = derive_sklyanin_entries(m.boundary)
    sq = m.boundary.squares()
    u, q = dtype(u), dtype(m.q)
    off = 2 * q ** 2 * u + 2 * q ** -2 * u ** -3
    return np.array(
        [
            [s.eps_plus * q - s.eps_minus / (q * u ** 2), sq["kappa_tilde"] * off],
            [sq["kappa"] * off, s.eps_minus * q - s.eps_plus / (q * u ** 2)],
        ],
        dtype=dtype,
    )
