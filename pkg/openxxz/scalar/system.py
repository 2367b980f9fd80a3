"""The homogeneous system L X = 0 for X_k = <Psi(v)|Psi(u-bar_k)>.

u_ext holds N+1 off-shell parameters, v the N on-shell dual roots. W is
built on auxiliary parameters w = (v_1, ..., v_N, w_{N+1}), so that the
last row of Omega = W L vanishes identically.
"""
from typing import Tuple

import numpy as np
import scipy.linalg
from pydantic import BaseModel, ConfigDict

from openxxz.config import COFACTOR_TOL, DET_L_TOL, IDENTITY_TOL, ROUTE_TOL
from openxxz.evaluation.metrics import column_scaled_det, lu_det, relative_residual
from openxxz.params.sampling import sample_offshell_roots, suite_rng
from openxxz.scalar.jacobian import jacobian_matrix_M
from openxxz.scalar.products import F_product, delta, u_collisions
from openxxz.schemas.report import CheckRecord, VerificationReport
from openxxz.spectral.eigenvalue import as_roots, bethe_function_Y, eigenvalue_lambda, without
from openxxz.spectral.solver import solved_roots
from openxxz.utils.exceptions import DegenerateRoots
from openxxz.utils.logger import logger
from openxxz.vectors.bethe import bethe_components, pair
from openxxz.vectors.reference import reference_states


class ScalarSystem(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    u_ext: Tuple[complex, ...]
    v: Tuple[complex, ...]
    w_aux: Tuple[complex, ...]
    L: np.ndarray
    W: np.ndarray
    Omega: np.ndarray
    OmegaTilde: np.ndarray
    M: np.ndarray

    @property
    def N(self):
        return len(self.v)


def _require_distinct(u_ext, v, w_aux, ctx):
    for label, values in (("u", u_ext), ("w", w_aux), ("v", v)):
        collisions = u_collisions(values, ctx)
        if collisions:
            i, j = collisions[0]
            raise DegenerateRoots(f"{label}_{i + 1} and {label}_{j + 1} coincide in U")
    if u_collisions(tuple(u_ext) + (w_aux[-1],), ctx):
        raise DegenerateRoots("Auxiliary parameter w collides with u in U")


def lagrange_weights(u_ext, w_aux, ctx):
    """Q(u_k, w-bar_i) / Q(u_k, u-bar_k), indexed [i, k]."""
    n = len(u_ext)
    out = np.empty((n, n), dtype=complex)
    for i in range(n):
        w_rest = without(w_aux, i)
        for k, uk in enumerate(u_ext):
            out[i, k] = ctx.Q_set(uk, w_rest) / ctx.Q_set(uk, without(u_ext, k))
    return out


def build_linear_system(u_ext, v, ctx, w=None, rng=None):
    """L, W, Omega, Omega-tilde and M for N+1 parameters u_ext and on-shell v.

    w is the free auxiliary parameter w_{N+1}; it is drawn from `rng` when
    not given.
    """
    u_ext, v = as_roots(u_ext), as_roots(v)
    n = len(u_ext)
    if n != len(v) + 1:
        raise ValueError(f"Need N+1={len(v) + 1} parameters u, got {n}")
    if w is None:
        rng = rng or np.random.default_rng(0)
        w = sample_offshell_roots(rng, 1, ctx, avoid=u_ext + v)[0]
    w_aux = v + (complex(w),)
    _require_distinct(u_ext, v, w_aux, ctx)

    F = np.array([ctx.F(uk) for uk in u_ext])
    Q_self = np.array([ctx.Q_set(uk, without(u_ext, k)) for k, uk in enumerate(u_ext)])

    L = np.empty((n, n), dtype=complex)
    for k in range(n):
        rest = without(u_ext, k)
        for j, uj in enumerate(u_ext):
            L[k, j] = -F[k] / F[j] * bethe_function_Y(uj, rest, ctx) / Q_self[j]
            if k == j:
                L[k, j] += eigenvalue_lambda(uj, v, ctx)

    W = lagrange_weights(u_ext, w_aux, ctx) / F[None, :]
    Omega = W @ L
    V = np.diag([1 / ctx.Q(vi, w) for vi in v] + [0.0])
    OmegaTilde = V @ Omega
    M = jacobian_matrix_M(u_ext, v, ctx)

    return ScalarSystem(u_ext=u_ext, v=v, w_aux=w_aux, L=L, W=W, Omega=Omega, OmegaTilde=OmegaTilde, M=M)


def lagrange_identity_residuals(u_ext, w_aux, a_values, ctx):
    """Worst residual of sum_k Q(u_k, w-bar_i)/Q(u_k, u-bar_k) = 1 and of its
    shifted form with Q(a u_j, u-bar_k) -> Q(a u_j, w-bar_i)."""
    u_ext, w_aux = as_roots(u_ext), as_roots(w_aux)
    weights = lagrange_weights(u_ext, w_aux, ctx)
    worst = float(np.max(np.abs(weights.sum(axis=1) - 1)))
    for a in a_values:
        for uj in u_ext:
            shifted = np.array([ctx.Q_set(a * uj, without(u_ext, k)) for k in range(len(u_ext))])
            for i in range(len(w_aux)):
                target = ctx.Q_set(a * uj, without(w_aux, i))
                scale = max(float(np.sum(np.abs(weights[i] * shifted))), abs(target))
                worst = max(worst, float(abs(weights[i] @ shifted - target) / scale))
    return worst


def omega_last_row(system):
    """max_j |Omega_{N+1,j}| relative to sum_k |W_{N+1,k} L_kj|."""
    scale = np.abs(system.W[-1]) @ np.abs(system.L)
    return float(np.max(np.abs(system.Omega[-1]) / scale))


def omega_tilde_residual(system, ctx):
    """Omega-tilde against M_ij / (dU(v_i) F(u_j) Q(u_j, u-bar_j)) on the first N rows."""
    u = system.u_ext
    column = np.array([ctx.F(uj) * ctx.Q_set(uj, without(u, j)) for j, uj in enumerate(u)])
    row = np.array([ctx.dU(vi) for vi in system.v])
    expected = system.M / (row[:, None] * column[None, :])
    return relative_residual(system.OmegaTilde[:-1], expected)


def direct_overlaps(system, m, dtype=complex):
    """X_l = <Psi(v)|Psi(u-bar_l)> by explicit construction."""
    reference = reference_states(m, dtype)
    bra = bethe_components(system.v, "bra", m, dtype, reference)
    return np.array(
        [pair(bra, bethe_components(without(system.u_ext, l), "ket", m, dtype, reference)) for l in range(len(system.u_ext))]
    )


def cofactor_check(system, X, ctx):
    """Null vector of L against X, and the constancy of
    F(u-bar_l) Delta(u-bar_l) X_l / det M_l over l."""
    _, singular_values, vh = scipy.linalg.svd(system.L)
    null = vh[-1].conj()
    scale = np.vdot(null, X) / np.vdot(null, null)
    null_residual = float(np.linalg.norm(X - scale * null) / np.linalg.norm(X))

    ratios = []
    for l in range(len(system.u_ext)):
        rest = without(system.u_ext, l)
        M_l = np.delete(system.M, l, axis=1)
        ratios.append(F_product(rest, ctx) * delta(rest, ctx) * X[l] / lu_det(M_l))
    ratios = np.array(ratios)
    spread = float(np.max(np.abs(ratios - ratios[0])) / np.max(np.abs(ratios)))

    return {
        "null_vector": null_residual,
        "cofactor_ratio": spread,
        "singular_ratio": float(singular_values[-1] / singular_values[0]),
        "G": complex(ratios[0]),
    }


def linear_system_checks(system, m, ctx, a_values=None):
    if a_values is None:
        a_values = (m.q, 1 / m.q, 0.83 + 0.41j)
    report = VerificationReport(name="linear_system")
    report.add(CheckRecord.below("det_L", "det_L", column_scaled_det(system.L), DET_L_TOL, N=system.N))
    report.add(CheckRecord.below("omega_last_row", "det_L", omega_last_row(system), DET_L_TOL, N=system.N))
    report.add(CheckRecord.below(
        "lagrange_identities", "identities",
        lagrange_identity_residuals(system.u_ext, system.w_aux, a_values, ctx), IDENTITY_TOL,
    ))
    report.add(CheckRecord.below("omega_tilde", "identities", omega_tilde_residual(system, ctx), ROUTE_TOL))

    cofactors = cofactor_check(system, direct_overlaps(system, m), ctx)
    report.add(CheckRecord.below("null_vector", "cofactor", cofactors["null_vector"], COFACTOR_TOL))
    report.add(CheckRecord.below("cofactor_ratio", "cofactor", cofactors["cofactor_ratio"], COFACTOR_TOL))
    logger.info(
        f"Linear system N={system.N}: det L {report.check('det_L').value:.2e}, "
        f"null vector {cofactors['null_vector']:.2e}, cofactor spread {cofactors['cofactor_ratio']:.2e}"
    )
    return report


def execute_linear_system_block(block, context):
    m, ctx = context["params"], context["ctx"]
    rng = suite_rng(context["seed"], "linear_system")
    checks = []
    for v in solved_roots(context):
        u_ext = sample_offshell_roots(rng, m.N + 1, ctx, avoid=v.roots)
        system = build_linear_system(u_ext, v, ctx, rng=rng)
        checks.extend(linear_system_checks(system, m, ctx).checks)
    context["checks"].extend(VerificationReport.worst(checks))
    return context
