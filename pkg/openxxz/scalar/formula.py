"""Determinant formula for <Psi(v)|Psi(u)> with an on-shell dual vector."""
import cmath
import itertools

import numpy as np

from openxxz.config import GENERICITY_TOL, NU_TOL, ONSHELL_TOL, PERMUTATION_TOL
from openxxz.evaluation.metrics import condition, lu_det, relative_error
from openxxz.params.boundary import scalar_pochhammer_arguments
from openxxz.params.qspecial import q_pochhammer, require_nonvanishing_pochhammer
from openxxz.scalar.jacobian import jacobian_matrix_M
from openxxz.scalar.products import F_product, dU_product, delta, delta_prime, u_collisions
from openxxz.schemas.report import CheckRecord, ScalarResult, complex_pair
from openxxz.schemas.roots import BetheRoots
from openxxz.spectral.eigenvalue import as_roots, bethe_residuals
from openxxz.spectral.functions import SpectralContext
from openxxz.utils.exceptions import DegenerateDenominator, OffShellDual, ZeroParameter
from openxxz.utils.logger import logger
from openxxz.vectors.bethe import bethe_components, pair
from openxxz.vectors.reference import reference_states

XI_POINT = 1.3 * cmath.exp(0.4j)


# ===================== eta and nu_N =====================

def xi_matrix(a, q, N):
    """Xi^q_ij = prod_{k != j}(q a^{2i} - q^-1 a^{2k}) / prod_{k != i}(a^{2i} - a^{2k}), i, j = 1..N."""
    a2 = [a ** (2 * i) for i in range(1, N + 1)]
    out = np.empty((N, N), dtype=complex)
    for i in range(N):
        denominator = np.prod([a2[i] - a2[k] for k in range(N) if k != i])
        for j in range(N):
            numerator = np.prod([q * a2[i] - a2[k] / q for k in range(N) if k != j])
            out[i, j] = numerator / denominator
    return out


def nu_matrix(m, a=XI_POINT):
    b, q, N = m.boundary, m.q, m.N
    _require(b, ("mu", "mu_tilde", "xi", "xi_tilde"))
    cross = b.kappa * b.kappa_tilde * b.tau * b.tau_tilde
    diagonal = (b.kappa_tilde * b.tau_tilde) ** 2 + (b.kappa * b.tau) ** 2
    return diagonal * np.eye(N, dtype=complex) + cross * (
        b.mu * b.xi_tilde / (b.mu_tilde * b.xi) * xi_matrix(a, 1 / q, N)
        + b.mu_tilde * b.xi / (b.mu * b.xi_tilde) * xi_matrix(a, q, N)
    )


def nu_determinant(m, a=XI_POINT):
    return lu_det(nu_matrix(m, a))


def nu_pochhammer(m):
    b = m.boundary
    args = scalar_pochhammer_arguments(m)
    return (
        (b.kappa * b.tau) ** (2 * m.N)
        * q_pochhammer(*args["nu_first"])
        * q_pochhammer(*args["nu_second"])
    )


def _require(b, names):
    zeros = b.zero_fields(names)
    if zeros:
        raise ZeroParameter(f"Boundary parameters must be nonzero here: {zeros}")


def eta_value(m, branch=1):
    b, q, N = m.boundary, m.q, m.N
    _require(b, ("kappa", "kappa_tilde", "xi", "xi_tilde"))
    args = scalar_pochhammer_arguments(m)
    for label in ("eta_xi_denominator", "nu_first"):
        require_nonvanishing_pochhammer(*args[label], label)

    d = q - 1 / q
    prefactor = (1j * b.xi_tilde / (q ** N * d * b.kappa_tilde * b.kappa * b.xi)) ** N
    return (
        branch ** N * prefactor
        * q_pochhammer(*args["eta_numerator"])
        / (q_pochhammer(*args["eta_xi_denominator"]) * q_pochhammer(*args["nu_first"]))
    )


def eta_and_nu(m, branch=1):
    return {
        "eta": eta_value(m, branch),
        "nu_N": nu_pochhammer(m),
        "nu_determinant": nu_determinant(m),
    }


# ===================== the formula =====================

def _require_onshell(v, ctx):
    residuals = v.residuals if isinstance(v, BetheRoots) and v.residuals else bethe_residuals(v, ctx)
    worst = max(residuals) if len(residuals) else 0.0
    if worst > ONSHELL_TOL:
        raise OffShellDual(f"Dual roots are off shell: max scaled residual {worst:.3e} > {ONSHELL_TOL}")


def _require_denominators(u, v, ctx):
    for label, roots in (("u", u), ("v", v)):
        collisions = u_collisions(roots, ctx)
        if collisions:
            i, j = collisions[0]
            raise DegenerateDenominator(
                f"Vandermonde product of {label} vanishes: {label}_{i + 1} and {label}_{j + 1} coincide in U"
            )
    q = ctx.q
    for k, uk in enumerate(u):
        z = abs(q * uk) ** 2
        if abs(q ** 2 * uk ** 2 - 1 / (q ** 2 * uk ** 2)) <= GENERICITY_TOL * (z + 1 / z):
            raise DegenerateDenominator(f"F(u_{k + 1}) vanishes")
    for k, vk in enumerate(v):
        z = abs(q * vk ** 2)
        if abs(q * vk ** 2 - 1 / (q * vk ** 2)) <= GENERICITY_TOL * (z + 1 / z):
            raise DegenerateDenominator(f"dU(v_{k + 1}) vanishes")


def determinant_side(u, v, ctx, eta, overlap):
    """eta <Psi(v)|N> det M / (dU(v) Delta'(v) F(u) Delta(u)), plus det M and cond M."""
    M = jacobian_matrix_M(u, v, ctx)
    det_M = lu_det(M)
    denominator = dU_product(v, ctx) * delta_prime(v, ctx) * F_product(u, ctx) * delta(u, ctx)
    return eta * overlap * det_M / denominator, det_M, condition(M)


def scalar_product_determinant(u, v, m, branch=1, dtype=complex, ctx=None):
    ctx = ctx or SpectralContext.from_params(m)
    u_roots, v_roots = as_roots(u), as_roots(v)
    if len(u_roots) != m.N or len(v_roots) != m.N:
        raise ValueError(f"Both parameter sets need N={m.N} entries")

    _require_denominators(u_roots, v_roots, ctx)
    _require_onshell(v, ctx)

    reference = reference_states(m, dtype)
    bra = bethe_components(v_roots, "bra", m, dtype, reference)
    ket = bethe_components(u_roots, "ket", m, dtype, reference)
    lhs = pair(bra, ket)
    overlap = pair(bra, reference["ket_N"])

    eta = eta_value(m, branch)
    rhs, det_M, cond = determinant_side(u_roots, v_roots, ctx, eta, overlap)
    result = ScalarResult.from_sides(lhs, rhs, eta, branch=branch, bra_overlap=overlap, det_M=det_M, condition=cond)
    logger.debug(f"Scalar product N={m.N}: lhs {lhs:.6e}, rhs {rhs:.6e}, rel err {result.relative_error:.3e}")
    return result


def orbit_partner(u, q):
    return 1 / (q * u)


def orbit_consistency(u, v, m, index=0, branch=1):
    """Replace u_index by its crossing partner: F(u) lhs and F(u) rhs must not change."""
    ctx = SpectralContext.from_params(m)
    u_roots = as_roots(u)
    moved = list(u_roots)
    moved[index] = orbit_partner(moved[index], m.q)
    moved = tuple(moved)

    before = scalar_product_determinant(u_roots, v, m, branch, ctx=ctx)
    after = scalar_product_determinant(moved, v, m, branch, ctx=ctx)
    F_before, F_after = F_product(u_roots, ctx), F_product(moved, ctx)

    lhs_change = relative_error(F_before * before.lhs_direct, F_after * after.lhs_direct)
    rhs_change = relative_error(F_before * before.rhs_determinant, F_after * after.rhs_determinant)
    return [
        CheckRecord.below("orbit_lhs", "orbit", lhs_change, PERMUTATION_TOL, index=index),
        CheckRecord.below("orbit_rhs", "orbit", rhs_change, PERMUTATION_TOL, index=index),
    ]


def permutation_consistency(u, v, m, branch=1):
    """Worst change of lhs and rhs over all reorderings of u."""
    ctx = SpectralContext.from_params(m)
    u_roots = as_roots(u)
    base = scalar_product_determinant(u_roots, v, m, branch, ctx=ctx)
    worst_lhs, worst_rhs = 0.0, 0.0
    for order in itertools.permutations(range(len(u_roots))):
        permuted = tuple(u_roots[k] for k in order)
        result = scalar_product_determinant(permuted, v, m, branch, ctx=ctx)
        worst_lhs = max(worst_lhs, relative_error(base.lhs_direct, result.lhs_direct))
        worst_rhs = max(worst_rhs, relative_error(base.rhs_determinant, result.rhs_determinant))
    return [
        CheckRecord.below("permutation_lhs", "permutation", worst_lhs, PERMUTATION_TOL),
        CheckRecord.below("permutation_rhs", "permutation", worst_rhs, PERMUTATION_TOL),
    ]


def nu_identity_check(m):
    """det of the Xi-matrix combination against its q-Pochhammer product."""
    values = eta_and_nu(m)
    error = relative_error(values["nu_determinant"], values["nu_N"])
    logger.info(f"nu_{m.N}: determinant vs product relative error {error:.3e}")
    return CheckRecord.below(
        "nu_identity", "nu", error, NU_TOL,
        N=m.N, nu_N=complex_pair(values["nu_N"]), eta=complex_pair(values["eta"]),
    )


def execute_nu_identity_block(block, context):
    m = context["params"]
    context["checks"].append(nu_identity_check(m))
    second_point = block.params.get("second_point", 0.9 * cmath.exp(1.1j))
    spread = relative_error(nu_determinant(m), nu_determinant(m, second_point))
    context["checks"].append(CheckRecord.below("nu_point_independence", "nu", spread, NU_TOL, N=m.N))
    return context
