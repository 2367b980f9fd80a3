import mpmath

from openxxz.config import GENERICITY_TOL
from openxxz.utils.exceptions import PochhammerZero


def q_pochhammer(b, q, n, dps=None):
    """(b; q)_n = prod_{k<n} (1 - b q^k), evaluated with mpmath.qp."""
    if n < 0:
        raise ValueError(f"q-Pochhammer length must be nonnegative, got {n}")
    if n == 0:
        return complex(1.0)
    if dps is None:
        return complex(mpmath.qp(mpmath.mpc(b), mpmath.mpc(q), n))
    with mpmath.workdps(dps):
        return complex(mpmath.qp(mpmath.mpc(b), mpmath.mpc(q), n))


def require_nonvanishing_pochhammer(b, q, n, label):
    """Reject (b; q)_n when one of its factors is numerically zero."""
    for k in range(n):
        factor = 1 - b * q ** k
        if abs(factor) <= GENERICITY_TOL * (1 + abs(b * q ** k)):
            raise PochhammerZero(f"{label}: factor k={k} of ({b}; {q})_{n} vanishes")
    return q_pochhammer(b, q, n)
