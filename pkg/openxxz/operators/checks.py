"""Randomized certification of the algebraic relations behind the chain:
Yang-Baxter, reflection and dual reflection, RTT, transfer-matrix
commutativity and crossing, and the Hamiltonian reconstruction."""
import numpy as np

from openxxz.config import ALGEBRA_TOL, HAMILTONIAN_TOL
from openxxz.evaluation.metrics import relative_residual
from openxxz.operators.hamiltonian import hamiltonian_direct, hamiltonian_from_transfer
from openxxz.operators.kmatrix import k_minus, k_plus
from openxxz.operators.local import IDENTITY, aux_blocks, unit
from openxxz.operators.monodromy import monodromy_matrix
from openxxz.operators.rmatrix import r_matrix
from openxxz.operators.transfer import crossing_point, transfer_matrix
from openxxz.params.sampling import suite_rng
from openxxz.schemas.params import ModelParams
from openxxz.schemas.report import CheckRecord, VerificationReport, complex_pair
from openxxz.utils.logger import logger

SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


def random_spectral(rng, r_min=0.5, r_max=2.0):
    return complex(rng.uniform(r_min, r_max) * np.exp(2j * np.pi * rng.uniform()))


def random_q(rng):
    return complex(rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(0.15, np.pi / 2 - 0.15)))


def _require_trials(trials):
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")


# ===================== Yang-Baxter =====================

def yang_baxter_residual(u, v, q):
    R_uv, R_u, R_v = r_matrix(u / v, q), r_matrix(u, q), r_matrix(v, q)
    R12 = np.kron(R_uv, IDENTITY)
    P23 = np.kron(IDENTITY, SWAP)
    R13 = P23 @ np.kron(R_u, IDENTITY) @ P23
    R23 = np.kron(IDENTITY, R_v)
    lhs = R12 @ R13 @ R23
    rhs = R23 @ R13 @ R12
    return relative_residual(lhs, rhs, R12, R13, R23)


def check_yang_baxter(trials, rng, q=None):
    _require_trials(trials)
    worst, draws = 0.0, []
    for _ in range(trials):
        u, v = random_spectral(rng), random_spectral(rng)
        qq = random_q(rng) if q is None else q
        worst = max(worst, yang_baxter_residual(u, v, qq))
        draws.append([complex_pair(u), complex_pair(v), complex_pair(qq)])
    logger.info(f"Yang-Baxter max residual over {trials} draws: {worst:.3e}")
    return CheckRecord.below("yang_baxter", "yang_baxter", worst, ALGEBRA_TOL, draws=draws)


# ===================== Reflection equations =====================

def reflection_residuals(u, v, m):
    q = m.q
    Km_u, Km_v = k_minus(u, m), k_minus(v, m)
    Kp_u, Kp_v = k_plus(u, m), k_plus(v, m)

    R_ratio, R_prod = r_matrix(u / v, q), r_matrix(u * v, q)
    K1, K2 = np.kron(Km_u, IDENTITY), np.kron(IDENTITY, Km_v)
    re = relative_residual(
        R_ratio @ K1 @ R_prod @ K2,
        K2 @ R_prod @ K1 @ R_ratio,
        R_ratio, K1, R_prod, K2,
    )

    R_dual_ratio, R_dual_prod = r_matrix(v / u, q), r_matrix(1 / (q ** 2 * u * v), q)
    K1, K2 = np.kron(Kp_u, IDENTITY), np.kron(IDENTITY, Kp_v)
    dre = relative_residual(
        R_dual_ratio @ K1 @ R_dual_prod @ K2,
        K2 @ R_dual_prod @ K1 @ R_dual_ratio,
        R_dual_ratio, K1, R_dual_prod, K2,
    )
    return re, dre


def check_reflection_equations(m, trials, rng=None):
    _require_trials(trials)
    rng = np.random.default_rng(0) if rng is None else rng

    worst_re, worst_dre, draws = 0.0, 0.0, []
    for _ in range(trials):
        u, v = random_spectral(rng), random_spectral(rng)
        re, dre = reflection_residuals(u, v, m)
        worst_re, worst_dre = max(worst_re, re), max(worst_dre, dre)
        draws.append([complex_pair(u), complex_pair(v)])

    logger.info(f"Reflection max residual {worst_re:.3e}, dual {worst_dre:.3e}")
    report = VerificationReport(name="reflection_equations")
    report.add(CheckRecord.below("reflection_equation", "reflection", worst_re, ALGEBRA_TOL, draws=draws))
    report.add(CheckRecord.below("dual_reflection_equation", "dual_reflection", worst_dre, ALGEBRA_TOL, draws=draws))
    return report


# ===================== Monodromy and transfer matrix =====================

def rtt_residual(m, u, v):
    """R_12(u/v) T_1(u) T_2(v) = T_2(v) T_1(u) R_12(u/v) on aux1 x aux2 x quantum."""
    dim = 2 ** m.N
    Tu = aux_blocks(monodromy_matrix(u, m))
    Tv = aux_blocks(monodromy_matrix(v, m))

    def on_first(blocks):
        return sum(
            np.kron(np.kron(unit(a, b), IDENTITY), blocks[2 * a + b])
            for a in range(2) for b in range(2)
        )

    def on_second(blocks):
        return sum(
            np.kron(np.kron(IDENTITY, unit(a, b)), blocks[2 * a + b])
            for a in range(2) for b in range(2)
        )

    R12 = np.kron(r_matrix(u / v, m.q), np.eye(dim))
    T1, T2 = on_first(Tu), on_second(Tv)
    return relative_residual(R12 @ T1 @ T2, T2 @ T1 @ R12, R12, T1, T2)


def check_rtt(m, trials, rng):
    _require_trials(trials)
    worst = max(rtt_residual(m, random_spectral(rng), random_spectral(rng)) for _ in range(trials))
    logger.info(f"RTT max residual {worst:.3e} (N={m.N})")
    return CheckRecord.below("rtt_relation", "commutativity", worst, ALGEBRA_TOL, N=m.N)


def check_transfer_family(m, trials, rng):
    _require_trials(trials)
    worst_comm, worst_cross, draws = 0.0, 0.0, []
    for _ in range(trials):
        u, v = random_spectral(rng), random_spectral(rng)
        tu, tv = transfer_matrix(u, m), transfer_matrix(v, m)
        worst_comm = max(worst_comm, relative_residual(tu @ tv, tv @ tu, tu, tv))
        t_cross = transfer_matrix(crossing_point(u, m.q), m)
        worst_cross = max(worst_cross, relative_residual(tu, t_cross, tu))
        draws.append([complex_pair(u), complex_pair(v)])

    logger.info(f"Transfer commutativity {worst_comm:.3e}, crossing {worst_cross:.3e} (N={m.N})")
    return [
        CheckRecord.below("transfer_commutativity", "commutativity", worst_comm, ALGEBRA_TOL, N=m.N, draws=draws),
        CheckRecord.below("transfer_crossing", "crossing", worst_cross, ALGEBRA_TOL, N=m.N, draws=draws),
    ]


# ===================== Hamiltonian =====================

def homogeneous_point(m):
    return ModelParams(N=m.N, q=m.q, x=tuple(1.0 + 0j for _ in range(m.N)), boundary=m.boundary, mode="homogeneous")


def check_hamiltonian(m):
    hom = homogeneous_point(m)
    H_direct = hamiltonian_direct(hom)
    H_transfer = hamiltonian_from_transfer(hom)
    residual = relative_residual(H_transfer, H_direct, H_direct)
    logger.info(f"Hamiltonian reconstruction residual {residual:.3e} (N={m.N})")
    return CheckRecord.below("hamiltonian_reconstruction", "hamiltonian", residual, HAMILTONIAN_TOL, N=m.N)


# ===================== Suite blocks =====================

def execute_yang_baxter_block(block, context):
    rng = suite_rng(context["seed"], "yang_baxter")
    context["checks"].append(check_yang_baxter(block.params.get("trials", 100), rng))
    return context


def execute_reflection_block(block, context):
    rng = suite_rng(context["seed"], "reflection")
    report = check_reflection_equations(context["params"], block.params.get("trials", 100), rng)
    context["checks"].extend(report.checks)
    return context


def execute_transfer_block(block, context):
    m = context["params"]
    rng = suite_rng(context["seed"], "transfer_family")
    trials = block.params.get("trials", 10)
    context["checks"].extend(check_transfer_family(m, trials, rng))
    context["checks"].append(check_rtt(m, trials, rng))
    return context


def execute_hamiltonian_block(block, context):
    m = context["params"]
    if m.N < 2:
        message = f"Hamiltonian reconstruction skipped: needs N >= 2, got N={m.N}"
        logger.warning(message)
        context["warnings"].append(message)
        return context
    context["checks"].append(check_hamiltonian(m))
    return context
