"""Large-u behaviour of the scalar product along u_i = u a^i."""
import cmath

import numpy as np

from openxxz.config import ASYMPTOTIC_TOL, NU_TOL
from openxxz.evaluation.metrics import lu_det, relative_residual
from openxxz.params.boundary import modified_constants, scalar_pochhammer_arguments
from openxxz.params.qspecial import q_pochhammer
from openxxz.scalar.formula import XI_POINT, nu_pochhammer, xi_matrix
from openxxz.scalar.jacobian import jacobian_form_offdiagonal, jacobian_matrix_M
from openxxz.scalar.products import F_product, dU_product, delta, delta_prime
from openxxz.schemas.report import CheckRecord, VerificationReport
from openxxz.spectral.eigenvalue import as_roots, eigenvalue_lambda
from openxxz.spectral.functions import SpectralContext
from openxxz.spectral.solver import solved_roots
from openxxz.utils.logger import logger
from openxxz.vectors.bethe import bethe_components, ket_m_sequence, pair
from openxxz.vectors.reference import reference_states

MAGNITUDES = (1e2, 1e3, 1e4)
PHASE = 0.3


def geometric_roots(u, N, a=XI_POINT):
    return tuple(u * a ** i for i in range(1, N + 1))


def _leading_power(u, m):
    q, N = m.q, m.N
    return (q * u ** 2) ** (N + 2) / (q - 1 / q) ** (2 * N)


def lambda_leading_ratio(u, v, m, ctx, a=XI_POINT):
    """Lambda(u_i|v) over (q u_i^2)^{N+2} (kt^2 tt^2 + k^2 t^2) / d^{2N}, worst over i."""
    b = m.boundary
    constant = (b.kappa_tilde * b.tau_tilde) ** 2 + (b.kappa * b.tau) ** 2
    worst = 0.0
    for ui in geometric_roots(u, m.N, a):
        ratio = eigenvalue_lambda(ui, v, ctx) / (_leading_power(ui, m) * constant)
        worst = max(worst, abs(ratio - 1))
    return worst


def jacobian_entries_residual(u, m, ctx, a=XI_POINT):
    """Off-diagonal part of the Jacobian form against its Xi^q leading term."""
    b, q, N = m.boundary, m.q, m.N
    roots = geometric_roots(u, N, a)
    cross = b.kappa * b.kappa_tilde * b.tau * b.tau_tilde
    xi_part = cross * (
        b.mu * b.xi_tilde / (b.mu_tilde * b.xi) * xi_matrix(a, 1 / q, N)
        + b.mu_tilde * b.xi / (b.mu * b.xi_tilde) * xi_matrix(a, q, N)
    )
    leading = np.array([_leading_power(ui, m) for ui in roots])[:, None] * xi_part
    return relative_residual(jacobian_form_offdiagonal(roots, ctx), leading)


def scalar_product_along(u, v, m, a=XI_POINT, dtype=complex, reference=None):
    reference = reference or reference_states(m, dtype)
    bra = bethe_components(v, "bra", m, dtype, reference)
    ket = bethe_components(geometric_roots(u, m.N, a), "ket", m, dtype, reference)
    return pair(bra, ket), pair(bra, reference["ket_N"])


def scalar_leading_coefficient(m):
    """Coefficient of (prod u_i)^{2N+3} <Psi(v)|N> in the large-u scalar product."""
    b, q, N = m.boundary, m.q, m.N
    d = q - 1 / q
    args = scalar_pochhammer_arguments(m)
    return (
        (1j * b.kappa * b.xi_tilde / (b.kappa_tilde * b.xi) * b.tau ** 2) ** N
        / d ** (2 * N * N)
        * q_pochhammer(*args["eta_numerator"])
        * q_pochhammer(*args["nu_second"])
        / q_pochhammer(*args["eta_xi_denominator"])
    )


def creation_product_coefficient(m):
    """The same coefficient as the product of the single-operator leading
    terms of B(u, k)|N> over k = 0, 2, ..., 2N-2."""
    b, q, N = m.boundary, m.q, m.N
    d = q - 1 / q
    constants = modified_constants(m, check_range=False)
    beta = constants.beta
    out = 1.0 + 0j
    for k in ket_m_sequence(N):
        gamma = constants.gamma(k + 1)
        out *= (
            q ** (N + 1) / d ** (2 * N) * b.tau ** 2
            * (1 + 1j * b.mu_tilde * b.tau_tilde / (b.mu * b.tau) * q ** (-N + k) * beta)
            * (1 + 1j * b.mu * b.tau_tilde / (b.mu_tilde * b.tau) * q ** (N + k) * beta)
            / gamma
        )
    return out


def scalar_asymptotic_determinant(u, v, m, ctx, a=XI_POINT):
    """det M / (dU(v) Delta(u) F(u)) over q^{N^2} (prod u_i)^{2N+3} Delta'(v) nu_N / d^{2N^2-N}."""
    q, N = m.q, m.N
    d = q - 1 / q
    v = as_roots(v)
    roots = geometric_roots(u, N, a)
    measured = lu_det(jacobian_matrix_M(roots, v, ctx, check=False)) / (
        dU_product(v, ctx) * delta(roots, ctx) * F_product(roots, ctx)
    )
    predicted = (
        q ** (N * N) * np.prod(roots) ** (2 * N + 3) * delta_prime(v, ctx) * nu_pochhammer(m)
        / d ** (2 * N * N - N)
    )
    return complex(measured / predicted)


def _slopes(magnitudes, values):
    logs_u = np.log(np.asarray(magnitudes))
    # log-magnitudes in double: linalg has no extended-precision lstsq
    logs_v = np.log(np.abs(np.asarray(values)).astype(float))
    two_point = float((logs_v[-1] - logs_v[-2]) / (logs_u[-1] - logs_u[-2]))
    least_squares = float(np.polyfit(logs_u, logs_v, 1)[0])
    return two_point, least_squares


def asymptotic_scalar_suite(v, m, magnitudes=MAGNITUDES, phase=PHASE, a=XI_POINT, dtype=complex):
    ctx = SpectralContext.from_params(m)
    v = as_roots(v)
    N = m.N
    points = [r * cmath.exp(1j * phase) for r in magnitudes]
    largest = points[-1]
    logger.info(f"Scalar asymptotics at N={N}, |u| in {magnitudes}")

    report = VerificationReport(name="scalar_asymptotics")
    report.add(CheckRecord.below(
        "lambda_leading", "asymptotics", lambda_leading_ratio(largest, v, m, ctx, a), ASYMPTOTIC_TOL,
    ))
    report.add(CheckRecord.below(
        "jacobian_entries_leading", "asymptotics", jacobian_entries_residual(largest, m, ctx, a), ASYMPTOTIC_TOL,
    ))

    reference = reference_states(m, dtype)
    samples = [scalar_product_along(u, v, m, a, dtype, reference) for u in points]
    lhs_values = [s[0] for s in samples]
    overlap = samples[-1][1]

    expected_slope = N * (2 * N + 3)
    two_point, least_squares = _slopes(magnitudes, lhs_values)
    report.add(CheckRecord.below(
        "scalar_product_slope", "asymptotics", abs(two_point - expected_slope), ASYMPTOTIC_TOL,
        slope=two_point, least_squares_slope=least_squares, expected=expected_slope,
    ))

    coefficient = scalar_leading_coefficient(m)
    predicted = np.prod(geometric_roots(largest, N, a)) ** (2 * N + 3) * overlap * coefficient
    ratio = lhs_values[-1] / predicted
    report.add(CheckRecord.below("scalar_product_coefficient", "asymptotics", abs(ratio - 1), ASYMPTOTIC_TOL))

    product_form = creation_product_coefficient(m)
    report.add(CheckRecord.below(
        "coefficient_product_form", "asymptotics",
        abs(product_form - coefficient) / max(abs(product_form), abs(coefficient)), NU_TOL,
    ))

    determinant_ratio = scalar_asymptotic_determinant(largest, v, m, ctx, a)
    report.add(CheckRecord.below("determinant_leading", "asymptotics", abs(determinant_ratio - 1), ASYMPTOTIC_TOL))

    for c in report.checks:
        logger.info(f"  {c.name}: {c.value:.3e} (tol {c.tolerance:.1e}) {'ok' if c.passed else 'FAILED'}")
    return report


def execute_scalar_asymptotics_block(block, context):
    m = context["params"]
    v = solved_roots(context)[block.params.get("root_index", 0)]
    report = asymptotic_scalar_suite(
        v, m,
        tuple(block.params.get("magnitudes", MAGNITUDES)),
        block.params.get("phase", PHASE),
        dtype=context["dtype"],
    )
    context["checks"].extend(report.checks)
    return context
