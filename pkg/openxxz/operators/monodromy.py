"""Single-row monodromies T, T-hat and the double-row operators A, B, C, D."""
import numpy as np
from pydantic import BaseModel, ConfigDict

from openxxz.config import GENERICITY_TOL
from openxxz.operators.kmatrix import k_minus
from openxxz.operators.local import aux_blocks, aux_lift
from openxxz.operators.rmatrix import r_aux_site
from openxxz.utils.exceptions import CrossingSingularity, SingularParameter


class BlockMonodromy(BaseModel):
    """2x2 auxiliary-space blocks of an aux x quantum operator."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    @classmethod
    def from_full(cls, full):
        a, b, c, d = aux_blocks(full)
        return cls(a=a, b=b, c=c, d=d)

    def full(self):
        return np.block([[self.a, self.b], [self.c, self.d]])

    @property
    def dim(self):
        return self.a.shape[0]


def _ordered_product(factors):
    result = None
    for f in factors:
        result = f if result is None else result @ f
    return result


def monodromy_factors(u, m, dtype=complex):
    """R_{a1}(u/x_1), ..., R_{aN}(u/x_N) in product order."""
    return [r_aux_site(u / xj, m.q, j, m.N, dtype) for j, xj in enumerate(m.x)]


def hat_monodromy_factors(u, m, dtype=complex):
    """R_{aN}(u x_N), ..., R_{a1}(u x_1) in product order."""
    return [r_aux_site(u * m.x[j], m.q, j, m.N, dtype) for j in reversed(range(m.N))]


def _check_u(u):
    if u == 0:
        raise SingularParameter("Monodromy needs u != 0")


def monodromy_matrix(u, m, dtype=complex):
    _check_u(u)
    return _ordered_product(monodromy_factors(u, m, dtype))


def hat_monodromy_matrix(u, m, dtype=complex):
    _check_u(u)
    return _ordered_product(hat_monodromy_factors(u, m, dtype))


def monodromy(u, m, dtype=complex):
    return BlockMonodromy.from_full(monodromy_matrix(u, m, dtype))


def hat_monodromy(u, m, dtype=complex):
    return BlockMonodromy.from_full(hat_monodromy_matrix(u, m, dtype))


def crossing_denominator(u, q):
    return q * u ** 2 - 1 / (q * u ** 2)


def check_crossing(u, q):
    den = crossing_denominator(u, q)
    if abs(den) <= GENERICITY_TOL * (abs(q * u ** 2) + abs(1 / (q * u ** 2))):
        raise CrossingSingularity(f"u^4 = q^-2 at u = {u}")
    return den


def reflection_monodromy(u, m, dtype=complex):
    """K_a(u) = T_a(u) K^-_a(u) T-hat_a(u) on aux x quantum."""
    _check_u(u)
    return (
        monodromy_matrix(u, m, dtype)
        @ aux_lift(k_minus(u, m, dtype), m.N, dtype)
        @ hat_monodromy_matrix(u, m, dtype)
    )


def double_row_operators(u, m, dtype=complex):
    den = check_crossing(u, m.q)
    top_left, top_right, bottom_left, bottom_right = aux_blocks(reflection_monodromy(u, m, dtype))
    q = dtype(m.q)
    shift = (q - 1 / q) / dtype(den)
    return BlockMonodromy(
        a=top_left,
        b=top_right,
        c=bottom_left,
        d=bottom_right - shift * top_left,
    )
