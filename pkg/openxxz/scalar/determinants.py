"""det_N(M) four ways, for the reduced set u = (u_1, ..., u_N)."""
import itertools

import numpy as np

from openxxz.config import DET_B_TOL, ROUTE_TOL
from openxxz.evaluation.metrics import lu_det, relative_error
from openxxz.params.sampling import sample_offshell_roots, suite_rng
from openxxz.scalar.jacobian import bethe_route_matrix, jacobian_form_matrix, jacobian_matrix_M
from openxxz.scalar.products import dU_product, delta, delta_prime
from openxxz.schemas.report import CheckRecord, VerificationReport
from openxxz.spectral.eigenvalue import as_roots, without
from openxxz.spectral.solver import solved_roots
from openxxz.utils.logger import logger


def b_matrix(u, v, ctx):
    """B_kl = Q(u, v_l) / (Q(u_k, v_l) Q(v-bar_l, v_l))."""
    N = len(v)
    B = np.empty((N, N), dtype=complex)
    for l, vl in enumerate(v):
        common = np.prod([ctx.Q(uk, vl) for uk in u]) / np.prod([ctx.Q(vk, vl) for vk in without(v, l)])
        for k, uk in enumerate(u):
            B[k, l] = common / ctx.Q(uk, vl)
    return B


def determinant_routes(u, v, ctx):
    u, v = as_roots(u), as_roots(v)
    dU_v = dU_product(v, ctx)
    Y_over_Q = bethe_route_matrix(u, v, ctx)
    B = b_matrix(u, v, ctx)

    return {
        "direct": lu_det(jacobian_matrix_M(u, v, ctx)),
        "bethe_function": dU_v * lu_det(Y_over_Q),
        "b_transformed": dU_v * delta_prime(v, ctx) / delta_prime(u, ctx) * lu_det(B @ Y_over_Q),
        "jacobian": dU_v * delta_prime(v, ctx) * delta(u, ctx) * lu_det(jacobian_form_matrix(u, v, ctx)),
        "det_B": lu_det(B),
        "det_B_expected": delta_prime(u, ctx) / delta_prime(v, ctx),
    }


def determinant_crosschecks(u, v, ctx):
    routes = determinant_routes(u, v, ctx)
    report = VerificationReport(name="determinant_routes")
    names = ("direct", "bethe_function", "b_transformed", "jacobian")
    for a, b in itertools.combinations(names, 2):
        report.add(CheckRecord.below(f"route_{a}_vs_{b}", "routes", relative_error(routes[a], routes[b]), ROUTE_TOL))
    report.add(CheckRecord.below(
        "det_B", "routes", relative_error(routes["det_B"], routes["det_B_expected"]), DET_B_TOL,
    ))
    logger.info(f"Determinant routes (N={len(as_roots(v))}): worst spread {report.max_value('routes'):.3e}")
    return report


def execute_determinant_routes_block(block, context):
    m, ctx = context["params"], context["ctx"]
    rng = suite_rng(context["seed"], "determinant_routes")
    checks = []
    for v in solved_roots(context):
        u = sample_offshell_roots(rng, m.N, ctx, avoid=v.roots)
        checks.extend(determinant_crosschecks(u, v, ctx).checks)
    context["checks"].extend(VerificationReport.worst(checks))
    return context
