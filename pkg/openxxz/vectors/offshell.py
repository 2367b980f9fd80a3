"""Action of the transfer matrix on off-shell Bethe vectors."""
from openxxz.config import GENERICITY_TOL, OFFSHELL_TOL, ONSHELL_TOL
from openxxz.evaluation.metrics import relative_residual
from openxxz.operators.transfer import transfer_matrix
from openxxz.params.sampling import sample_offshell_roots, suite_rng
from openxxz.schemas.report import CheckRecord, VerificationReport, complex_pair
from openxxz.spectral.eigenvalue import as_roots, bethe_function_Y, eigenvalue_lambda, replaced, without
from openxxz.spectral.functions import SpectralContext
from openxxz.utils.exceptions import PoleCollision
from openxxz.utils.logger import logger
from openxxz.vectors.bethe import bethe_components
from openxxz.vectors.reference import reference_states


def _exchange_denominator(i, u, roots, ctx):
    """Q(u_i, {u, u-bar_i}), rejecting coincidences in U."""
    Ui = ctx.U(roots[i])
    for w in (u,) + without(roots, i):
        Uw = ctx.U(w)
        if abs(Ui - Uw) <= GENERICITY_TOL * (abs(Ui) + abs(Uw)):
            raise PoleCollision(f"Q(u_{i + 1}, {{u, u-bar_{i + 1}}}) vanishes at u = {u}")
    return ctx.Q(roots[i], u) * ctx.Q_set(roots[i], without(roots, i))


def offshell_sides(roots, side, m, u, dtype=complex, ctx=None):
    """(lhs, rhs, t(u), Psi) of the off-shell relation for the ket or bra."""
    ctx = ctx or SpectralContext.from_params(m)
    roots = as_roots(roots)
    reference = reference_states(m, dtype)

    weights = [
        ctx.F(u) / ctx.F(r) * bethe_function_Y(r, roots, ctx) / _exchange_denominator(i, u, roots, ctx)
        for i, r in enumerate(roots)
    ]
    t = transfer_matrix(u, m, dtype)
    psi = bethe_components(roots, side, m, dtype, reference)
    lhs = t @ psi if side == "ket" else psi @ t

    rhs = dtype(eigenvalue_lambda(u, roots, ctx)) * psi
    for i, weight in enumerate(weights):
        rhs = rhs + dtype(weight) * bethe_components(replaced(roots, i, u), side, m, dtype, reference)
    return lhs, rhs, t, psi


def offshell_residual(roots, m, u_probe, dtype=complex):
    ctx = SpectralContext.from_params(m)
    report = VerificationReport(name="offshell_relations")
    for side in ("ket", "bra"):
        lhs, rhs, t, psi = offshell_sides(roots, side, m, u_probe, dtype, ctx)
        residual = relative_residual(lhs, rhs, t, psi)
        logger.info(f"Off-shell {side} residual {residual:.3e} (N={m.N})")
        report.add(CheckRecord.below(
            f"offshell_{side}", "offshell", residual, OFFSHELL_TOL,
            N=m.N, u=complex_pair(u_probe), roots=[complex_pair(r) for r in as_roots(roots)],
        ))
    return report


def onshell_bra_residual(roots, m, u, dtype=complex):
    """||<Psi(v)| t(u) - Lambda(u|v) <Psi(v)||| relative to ||t|| ||Psi||."""
    ctx = SpectralContext.from_params(m)
    roots = as_roots(roots)
    t = transfer_matrix(u, m, dtype)
    bra = bethe_components(roots, "bra", m, dtype)
    lam = eigenvalue_lambda(u, roots, ctx)
    return relative_residual(bra @ t, dtype(lam) * bra, t, bra)


def onshell_bra_check(roots, m, u, dtype=complex):
    residual = onshell_bra_residual(roots, m, u, dtype)
    return CheckRecord.below("onshell_bra_eigenvector", "onshell", residual, ONSHELL_TOL, N=m.N, u=complex_pair(u))


def execute_offshell_block(block, context):
    m, ctx, dtype = context["params"], context["ctx"], context["dtype"]
    rng = suite_rng(context["seed"], "offshell")
    checks = []
    for _ in range(block.params.get("draws", 20)):
        roots = sample_offshell_roots(rng, m.N, ctx)
        probe = sample_offshell_roots(rng, 1, ctx, avoid=roots)[0]
        checks.extend(offshell_residual(roots, m, probe, dtype).checks)

    # On-shell dual vectors, when the solver ran upstream
    for v in context.get("roots", []):
        probe = sample_offshell_roots(rng, 1, ctx, avoid=v.roots)[0]
        checks.append(onshell_bra_check(v, m, probe, dtype))

    context["checks"].extend(VerificationReport.worst(checks))
    return context
