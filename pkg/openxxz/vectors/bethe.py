"""Modified Bethe vectors and their bilinear pairing.

ket: |Psi(u)> = B(u_1, 2(N-1)) B(u_2, 2(N-2)) ... B(u_N, 0) |N>
bra: <Psi(v)| = <N| C(v_1, 2) C(v_2, 4) ... C(v_N, 2N)
"""
import numpy as np

from openxxz.params.boundary import modified_constants
from openxxz.schemas.roots import BetheRoots, BetheVector
from openxxz.vectors.modified import modified_annihilation, modified_creation
from openxxz.vectors.reference import reference_states


def ket_m_sequence(N):
    return tuple(2 * (N - i) for i in range(1, N + 1))


def bra_m_sequence(N):
    return tuple(2 * i for i in range(1, N + 1))


def _as_bethe_roots(roots, m):
    if isinstance(roots, BetheRoots):
        return roots
    return BetheRoots(N=m.N, q=m.q, roots=tuple(complex(r) for r in roots))


def bethe_components(roots, side, m, dtype=complex, reference=None):
    """Raw component array of the ket or bra built on `roots` (any tuple of
    N spectral parameters, U-collisions allowed)."""
    roots = tuple(roots.roots) if isinstance(roots, BetheRoots) else tuple(roots)
    if len(roots) != m.N:
        raise ValueError(f"A Bethe vector needs exactly N={m.N} parameters, got {len(roots)}")

    # every gamma_m used below is checked up front
    constants = modified_constants(m)
    reference = reference or reference_states(m, dtype)

    if side == "ket":
        vector = np.asarray(reference["ket_N"], dtype=dtype)
        for u, midx in reversed(list(zip(roots, ket_m_sequence(m.N)))):
            vector = modified_creation(u, midx, m, dtype, constants) @ vector
    elif side == "bra":
        vector = np.asarray(reference["bra_N"], dtype=dtype)
        for v, midx in zip(roots, bra_m_sequence(m.N)):
            vector = vector @ modified_annihilation(v, midx, m, dtype, constants)
    else:
        raise ValueError(f"Unknown side '{side}'. Available: ['ket', 'bra']")
    return vector


def build_bethe_vector(roots, side, m, dtype=complex):
    roots = _as_bethe_roots(roots, m)
    components = bethe_components(roots, side, m, dtype)
    sequence = ket_m_sequence(m.N) if side == "ket" else bra_m_sequence(m.N)
    return BetheVector(components=components, params=roots, side=side, m_sequence=sequence)


def pair(bra, ket):
    """Bilinear <bra|ket>; no complex conjugation."""
    bra = bra.components if hasattr(bra, "components") else bra
    ket = ket.components if hasattr(ket, "components") else ket
    return complex(np.asarray(bra) @ np.asarray(ket))
