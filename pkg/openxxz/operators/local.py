"""Local spin operators and their embedding into site_1 x ... x site_N.

Basis index 0 is spin up. sigma_plus raises (|1> -> |0>).
"""
from functools import reduce

import numpy as np

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)


def unit(alpha, beta, dtype=complex):
    """Matrix unit E_{alpha beta} on C^2."""
    e = np.zeros((2, 2), dtype=dtype)
    e[alpha, beta] = 1
    return e


def kron_all(factors):
    return reduce(np.kron, factors)


def embed(op, site, N, dtype=complex):
    """Single-site operator acting on `site` (0-based) of an N-site chain."""
    factors = [np.eye(2, dtype=dtype) for _ in range(N)]
    factors[site] = np.asarray(op, dtype=dtype)
    return kron_all(factors)


def embed_aux_site(R4, site, N, dtype=complex):
    """Two-space matrix R acting on aux x site, aux being the slowest factor
    of aux x site_1 x ... x site_N. R4 uses the basis index 2*aux + site."""
    dim = 2 ** N
    out = np.zeros((2 * dim, 2 * dim), dtype=dtype)
    for alpha in range(2):
        for beta in range(2):
            block = np.zeros((dim, dim), dtype=dtype)
            for gamma in range(2):
                for delta in range(2):
                    w = R4[2 * alpha + gamma, 2 * beta + delta]
                    if w != 0:
                        block = block + w * embed(unit(gamma, delta, dtype), site, N, dtype)
            out[alpha * dim:(alpha + 1) * dim, beta * dim:(beta + 1) * dim] = block
    return out


def aux_blocks(full):
    """Split an aux x quantum matrix into its four quantum-space blocks."""
    d = full.shape[0] // 2
    return full[:d, :d], full[:d, d:], full[d:, :d], full[d:, d:]


def aux_lift(K2, N, dtype=complex):
    """A 2x2 auxiliary-space matrix as an operator on aux x quantum."""
    return np.kron(np.asarray(K2, dtype=dtype), np.eye(2 ** N, dtype=dtype))
