"""Large-u behaviour of the monodromies, the reflection monodromy and the
modified creation operator, expressed through U_q(sl_2) generators.

Half-integer powers of q use one fixed branch sq = sqrt(q) throughout, so
(q u^2)^{N/2} is (sq u)^N and q^{S^3} = diag(sq^{2 S^3}).
"""
import cmath
import math

import numpy as np
from pydantic import BaseModel, ConfigDict

from openxxz.config import A_EIGEN_TOL, ALGEBRA_TOL, ASYBB_TOL, DECAY_FACTOR, DOLAN_GRADY_TOL
from openxxz.evaluation.metrics import relative_residual
from openxxz.operators.local import SIGMA_MINUS, SIGMA_PLUS, SIGMA_Z, embed, kron_all
from openxxz.operators.monodromy import hat_monodromy_matrix, monodromy_matrix, reflection_monodromy
from openxxz.params.boundary import derive_sklyanin_entries
from openxxz.schemas.report import CheckRecord, VerificationReport
from openxxz.utils.logger import logger
from openxxz.vectors.bethe import ket_m_sequence
from openxxz.vectors.modified import modified_creation_asymptotics
from openxxz.vectors.reference import reference_states

MAGNITUDES = (1e3, 1e6)
PHASE = 0.3


class AsymptoticOperators(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    S3: np.ndarray
    qS3: np.ndarray
    Splus: np.ndarray
    Sminus: np.ndarray
    hatSplus: np.ndarray
    hatSminus: np.ndarray
    A: np.ndarray
    Astar: np.ndarray


def _half_power(sq, sign):
    """q^{sign sigma^3 / 2} on one site."""
    return np.diag([sq ** sign, sq ** -sign]).astype(complex)


def _string_sum(m, sq, local, left, right, weights):
    """sum_i w_i q^{left sum_{j<i} s^3_j/2} local_i q^{right sum_{j>i} s^3_j/2}"""
    N = m.N
    out = np.zeros((2 ** N, 2 ** N), dtype=complex)
    for i in range(N):
        factors = [_half_power(sq, left) if j < i else _half_power(sq, right) for j in range(N)]
        factors[i] = local
        out = out + weights[i] * kron_all(factors)
    return out


def asymptotic_operators(m):
    b = m.boundary
    s = derive_sklyanin_entries(b)
    q, N = m.q, m.N
    d = q - 1 / q
    sq = cmath.sqrt(q)
    x = np.array(m.x, dtype=complex)

    S3 = sum(embed(SIGMA_Z, i, N) for i in range(N)) / 2
    qS3 = kron_all([_half_power(sq, 1) for _ in range(N)])
    q2S3 = qS3 @ qS3
    q_minus_S3 = kron_all([_half_power(sq, -1) for _ in range(N)])
    q_minus_2S3 = q_minus_S3 @ q_minus_S3

    Splus = _string_sum(m, sq, SIGMA_PLUS, -1, 1, x)
    Sminus = _string_sum(m, sq, SIGMA_MINUS, 1, -1, x)
    hatSplus = _string_sum(m, sq, SIGMA_PLUS, 1, -1, 1 / x)
    hatSminus = _string_sum(m, sq, SIGMA_MINUS, -1, 1, 1 / x)

    A = s.nu_minus * q2S3 + d / sq * (b.tau_tilde ** 2 * Sminus @ qS3 + b.tau ** 2 * qS3 @ hatSplus)
    Astar = s.nu_plus * q_minus_2S3 + d / sq * (b.tau ** 2 * Splus @ q_minus_S3 + b.tau_tilde ** 2 * q_minus_S3 @ hatSminus)

    return AsymptoticOperators(
        S3=S3, qS3=qS3, Splus=Splus, Sminus=Sminus,
        hatSplus=hatSplus, hatSminus=hatSminus, A=A, Astar=Astar,
    )


def q_commutator(X, Y, q):
    return q * X @ Y - Y @ X / q


def dolan_grady_residuals(ops, m):
    q, b = m.q, m.boundary
    A, As = ops.A, ops.Astar
    scale = (q ** 2 - q ** -2) ** 2 * b.tau ** 2 * b.tau_tilde ** 2

    lhs = A @ q_commutator(A, q_commutator(A, As, q), 1 / q) - q_commutator(A, q_commutator(A, As, q), 1 / q) @ A
    first = relative_residual(lhs, scale * (A @ As - As @ A), A, A, A, As)

    lhs = As @ q_commutator(As, q_commutator(As, A, q), 1 / q) - q_commutator(As, q_commutator(As, A, q), 1 / q) @ As
    second = relative_residual(lhs, scale * (As @ A - A @ As), As, As, As, A)
    return first, second


def charge_structure_residual(ops, m):
    """[S^3, A] keeps only the S^- (charge -1) and S-hat^+ (charge +1) parts."""
    b, q = m.boundary, m.q
    d, sq = q - 1 / q, cmath.sqrt(q)
    expected = d / sq * (-b.tau_tilde ** 2 * ops.Sminus @ ops.qS3 + b.tau ** 2 * ops.qS3 @ ops.hatSplus)
    return relative_residual(ops.S3 @ ops.A - ops.A @ ops.S3, expected, ops.S3, ops.A)


def a_eigenvalue(m):
    b, q, N = m.boundary, m.q, m.N
    return 1j * b.tau * b.tau_tilde * (q ** N * b.mu / b.mu_tilde + q ** (-N) * b.mu_tilde / b.mu)


def a_eigenvalue_residual(ops, m):
    ket = reference_states(m)["ket_N"]
    return relative_residual(ops.A @ ket, a_eigenvalue(m) * ket, ops.A, ket)


def monodromy_remainders(u, m, ops):
    """Two-term expansion remainders of T and T-hat, relative to the leading scale."""
    q, N = m.q, m.N
    d, sq = q - 1 / q, cmath.sqrt(q)
    prod_x = complex(np.prod(np.array(m.x, dtype=complex)))
    lead = (sq * u / d) ** N
    sub = (sq * u / d) ** (N - 1)
    zero = np.zeros_like(ops.qS3)
    diagonal = np.block([[ops.qS3, zero], [zero, np.linalg.inv(ops.qS3)]])

    expected_T = lead * diagonal + sub * np.block([[zero, ops.Sminus], [ops.Splus, zero]])
    expected_hat = lead * diagonal + sub * np.block([[zero, ops.hatSminus], [ops.hatSplus, zero]])

    T = prod_x * monodromy_matrix(u, m)
    T_hat = hat_monodromy_matrix(u, m) / prod_x
    scale = abs(lead) * np.linalg.norm(diagonal)
    return (
        float(np.linalg.norm(T - expected_T) / scale),
        float(np.linalg.norm(T_hat - expected_hat) / scale),
    )


def reflection_leading_residual(u, m, ops):
    """Largest blockwise relative deviation of K_a(u) from its leading form."""
    b, q, N = m.boundary, m.q, m.N
    d = q - 1 / q
    scale = (q * u ** 2 / d ** 2) ** N
    identity = np.eye(2 ** N, dtype=complex)
    K = reflection_monodromy(u, m)
    dim = 2 ** N
    blocks = (K[:dim, :dim], K[:dim, dim:], K[dim:, :dim], K[dim:, dim:])
    leading = (
        scale * u * ops.A,
        scale * u ** 2 * b.tau ** 2 * identity,
        scale * u ** 2 * b.tau_tilde ** 2 * identity,
        scale * u * ops.Astar,
    )
    return max(relative_residual(k, lead, lead) for k, lead in zip(blocks, leading))


def _decay_check(name, small, large, magnitudes, family):
    """Pass when remainder(large)/remainder(small) is within DECAY_FACTOR of
    (|u_small|/|u_large|)^2."""
    predicted = (magnitudes[0] / magnitudes[1]) ** 2
    if small <= 0 or large <= 0:
        value = float("inf")
    else:
        value = abs(math.log10((large / small) / predicted))
    return CheckRecord.below(
        name, family, value, math.log10(DECAY_FACTOR),
        remainders=[small, large], predicted_ratio=predicted,
    )


def asymptotic_operator_suite(m, magnitudes=MAGNITUDES, phase=PHASE, dtype=complex):
    logger.info(f"Operator asymptotics at N={m.N}, |u| in {magnitudes}")
    ops = asymptotic_operators(m)
    report = VerificationReport(name="operator_asymptotics")
    points = [r * cmath.exp(1j * phase) for r in magnitudes]

    remainders = [monodromy_remainders(u, m, ops) for u in points]
    report.add(_decay_check("monodromy_expansion", remainders[0][0], remainders[-1][0], magnitudes, "asymptotics"))
    report.add(_decay_check("hat_monodromy_expansion", remainders[0][1], remainders[-1][1], magnitudes, "asymptotics"))

    kaasy = reflection_leading_residual(points[-1], m, ops)
    report.add(CheckRecord.below("reflection_monodromy_leading", "asymptotics", kaasy, ASYBB_TOL, u=abs(points[-1])))

    first, second = dolan_grady_residuals(ops, m)
    report.add(CheckRecord.below("dolan_grady_A", "dolan_grady", first, DOLAN_GRADY_TOL, N=m.N))
    report.add(CheckRecord.below("dolan_grady_A_star", "dolan_grady", second, DOLAN_GRADY_TOL, N=m.N))
    report.add(CheckRecord.below("s3_charge_structure", "dolan_grady", charge_structure_residual(ops, m), ALGEBRA_TOL, N=m.N))
    report.add(CheckRecord.below("a_eigenvalue", "a_eigenvalue", a_eigenvalue_residual(ops, m), A_EIGEN_TOL, N=m.N))

    ket = reference_states(m, dtype)["ket_N"]
    deviations = []
    for midx in ket_m_sequence(m.N):
        result = modified_creation_asymptotics(points[-1], midx, m, ket, dtype)
        deviations.append(max(abs(result["ratio"] - 1), result["residual"]))
    report.add(CheckRecord.below(
        "modified_creation_leading", "asymptotics", max(deviations), ASYBB_TOL,
        m_sequence=list(ket_m_sequence(m.N)),
    ))

    for c in report.checks:
        logger.info(f"  {c.name}: {c.value:.3e} (tol {c.tolerance:.1e}) {'ok' if c.passed else 'FAILED'}")
    return report


def execute_operator_asymptotics_block(block, context):
    m = context["params"]
    magnitudes = tuple(block.params.get("magnitudes", MAGNITUDES))
    report = asymptotic_operator_suite(m, magnitudes, block.params.get("phase", PHASE), context["dtype"])
    context["checks"].extend(report.checks)
    return context
