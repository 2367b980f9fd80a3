"""Boundary parametrizations: fundamental parameters -> Sklyanin K-matrix
entries -> Hamiltonian couplings, plus the modified-ansatz constants."""

from openxxz.config import GENERICITY_TOL
from openxxz.schemas.params import HamiltonianCouplings, ModifiedConstants, SklyaninEntries
from openxxz.utils.exceptions import DegenerateBoundary, SingularGamma, ZeroParameter


def _require_nonzero(boundary, names):
    zeros = boundary.zero_fields(names)
    if zeros:
        raise ZeroParameter(f"Boundary parameters must be nonzero here: {zeros}")


def derive_sklyanin_entries(b):
    _require_nonzero(b, ("mu", "mu_tilde", "xi", "xi_tilde"))

    tau_product = 1j * b.tau_tilde * b.tau
    kappa_product = 1j * b.kappa_tilde * b.kappa

    return SklyaninEntries(
        nu_minus=tau_product * (b.mu / b.mu_tilde + b.mu_tilde / b.mu),
        nu_plus=tau_product * (b.mu * b.mu_tilde + 1 / (b.mu * b.mu_tilde)),
        eps_minus=kappa_product * (b.xi / b.xi_tilde + b.xi_tilde / b.xi),
        eps_plus=kappa_product * (b.xi * b.xi_tilde + 1 / (b.xi_tilde * b.xi)),
    )


def derive_hamiltonian_couplings(m):
    s = derive_sklyanin_entries(m.boundary)
    b = m.boundary
    d = m.q - 1 / m.q

    eps_sum = s.eps_plus + s.eps_minus
    nu_sum = s.nu_plus + s.nu_minus
    if abs(eps_sum) <= GENERICITY_TOL * (abs(s.eps_plus) + abs(s.eps_minus)):
        raise DegenerateBoundary(f"eps_+ + eps_- vanishes (eps_+={s.eps_plus}, eps_-={s.eps_minus})")
    if abs(nu_sum) <= GENERICITY_TOL * (abs(s.nu_plus) + abs(s.nu_minus)):
        raise DegenerateBoundary(f"nu_+ + nu_- vanishes (nu_+={s.nu_plus}, nu_-={s.nu_minus})")

    return HamiltonianCouplings(
        epsilon=d / 2 * (s.eps_plus - s.eps_minus) / eps_sum,
        kappa_minus=2 * d / eps_sum * b.kappa ** 2,
        kappa_plus=2 * d / eps_sum * b.kappa_tilde ** 2,
        nu=d / 2 * (s.nu_minus - s.nu_plus) / nu_sum,
        tau_minus=2 * d / nu_sum * b.tau_tilde ** 2,
        tau_plus=2 * d / nu_sum * b.tau ** 2,
    )


def modified_constants(m, check_range=True):
    """alpha, beta of the modified creation/annihilation operators.

    With check_range, every odd m in [-2N+1, 2N+1] is checked for a
    vanishing gamma_m and all offenders are reported at once.
    """
    b = m.boundary
    _require_nonzero(b, ("kappa", "xi", "xi_tilde"))
    q, N = m.q, m.N

    constants = ModifiedConstants(
        alpha=-1j * (b.kappa_tilde * b.xi / (b.kappa * b.xi_tilde)) * q ** (1 + 2 * N),
        beta=-1j * (b.kappa_tilde * b.xi_tilde / (b.kappa * b.xi)) * q ** (1 - 2 * N),
        q=q,
    )

    if check_range:
        singular = [
            k for k in range(-2 * N + 1, 2 * N + 2, 2)
            if not gamma_is_regular(constants, k)
        ]
        if singular:
            raise SingularGamma(singular)
    return constants


def gamma_is_regular(constants, m):
    return abs(constants.gamma(m)) > GENERICITY_TOL * constants.gamma_scale(m)


def require_gamma(constants, m):
    if not gamma_is_regular(constants, m):
        raise SingularGamma([m])
    return constants.gamma(m)


def scalar_pochhammer_arguments(m):
    """Arguments (b, base, n) of the q-Pochhammer symbols entering the
    scalar-product prefactor eta and the asymptotic constant nu_N."""
    b = m.boundary
    _require_nonzero(b, ("kappa", "tau", "mu", "mu_tilde", "xi", "xi_tilde"))
    q, N = m.q, m.N
    ratio = b.kappa_tilde * b.tau_tilde / (b.kappa * b.tau)

    return {
        "eta_numerator": (-ratio * b.mu_tilde * b.xi_tilde / (b.mu * b.xi) * q ** (1 - 3 * N), q ** 2, N),
        "eta_xi_denominator": ((b.xi_tilde / b.xi) ** 2 * q ** (2 - 4 * N), q ** 4, N),
        "nu_first": (-ratio * b.mu_tilde * b.xi / (b.mu * b.xi_tilde) * q ** (1 - N), q ** 2, N),
        "nu_second": (-ratio * b.mu * b.xi_tilde / (b.mu_tilde * b.xi) * q ** (1 - N), q ** 2, N),
    }
