"""Bethe roots from exact diagonalization and the TQ relation.

The TQ relation Lambda(u)Q(u) = phi(u)Q(u/q) + phi(1/(qu))Q(qu) + H(u) is
linear in the coefficients of the monic polynomial Q(U) = U^N + sum c_r U^r
once Lambda is known numerically, so the roots come from one least-squares
solve and one companion-matrix root find.
"""
import cmath

import numpy as np

from openxxz.config import EIGENVALUE_TOL, GENERICITY_TOL, MAX_RESAMPLE, ONSHELL_TOL
from openxxz.evaluation.metrics import relative_error
from openxxz.operators.transfer import transfer_matrix
from openxxz.params.sampling import suite_rng
from openxxz.schemas.report import CheckRecord
from openxxz.schemas.roots import BetheRoots
from openxxz.spectral.eigenvalue import bethe_residuals, eigenvalue_lambda
from openxxz.utils.exceptions import GenericityFailure, IllConditioned, LiftFailure, ResidualTooLarge
from openxxz.utils.logger import logger

PROBE_POINT = 1.17 * cmath.exp(0.61j)
LSQ_CONDITION_LIMIT = 1e12


def lift_U_to_u(Uval, ctx):
    """A u with U(u) = Uval: the largest-modulus member of the orbit
    {+-u, +-1/(qu)}, with nonnegative real part."""
    q = ctx.q
    # q z^2 - d^2 U z + q^-1 = 0 in z = u^2, written monic
    p = ctx.d ** 2 * Uval / q
    s = cmath.sqrt(p * p - 4 / q ** 2)
    if abs(p - s) > abs(p + s):
        s = -s
    z_big = (p + s) / 2
    if z_big == 0:
        raise LiftFailure(f"Cannot lift U = {Uval}: degenerate quadratic")
    z_small = 1 / (q ** 2 * z_big)

    candidates = [cmath.sqrt(z_big)]
    if abs(abs(z_big) - abs(z_small)) <= 1e-12 * abs(z_big):
        candidates.append(cmath.sqrt(z_small))
    u = max(candidates, key=lambda z: (round(z.real, 12), round(z.imag, 12)))

    if abs(ctx.U(u) - Uval) > 1e-8 * max(1.0, abs(Uval)):
        raise LiftFailure(f"Lift of U = {Uval} gave U(u) = {ctx.U(u)}")
    return u


def transfer_eigenstates(m, u0=PROBE_POINT):
    """Eigen-decomposition of t(u0), sorted by (real, imaginary) eigenvalue."""
    values, vectors = np.linalg.eig(transfer_matrix(u0, m))
    order = np.lexsort((values.imag, values.real))
    return values[order], vectors[:, order]


def select_eigenstate(values, vectors, index):
    if not 0 <= index < len(values):
        raise ValueError(f"eigen_index {index} outside [0, {len(values)})")
    scale = float(np.max(np.abs(values)))
    others = np.delete(values, index)
    gap = float(np.min(np.abs(others - values[index]))) if len(others) else scale
    if gap <= EIGENVALUE_TOL * scale:
        raise IllConditioned(
            f"Eigenvalue {index} is degenerate at the probe point (gap {gap:.3e})",
            condition=scale / gap if gap > 0 else float("inf"),
        )
    return values[index], vectors[:, index]


def sample_points(ctx, count, rng, max_tries=MAX_RESAMPLE * 20):
    """Generic points on a circle |u| = r, r in [1.1, 1.5], pairwise separated in U."""
    r = rng.uniform(1.1, 1.5)
    points = []
    for _ in range(max_tries):
        if len(points) == count:
            break
        u = complex(r * np.exp(2j * np.pi * rng.uniform()))
        Uu = ctx.U(u)
        if any(abs(Uu - ctx.U(w)) <= 1e-2 * (abs(Uu) + abs(ctx.U(w))) for w in points):
            continue
        pole = ctx.q * u ** 2 - 1 / (ctx.q * u ** 2)
        if abs(pole) <= 1e-2 * abs(ctx.q * u ** 2):
            continue
        points.append(u)

    if len(points) < count:
        raise GenericityFailure(f"Could not place {count} separated sample points on |u| = {r:.3f}")
    return points


def numerical_eigenvalues(m, psi, points):
    """Lambda_num(u_k) = <w, t(u_k) psi>/<w, psi> with w = conj(psi)."""
    w = psi.conj()
    norm = w @ psi
    return np.array([(w @ transfer_matrix(u, m) @ psi) / norm for u in points])


def solve_q_coefficients(ctx, points, lambdas):
    """Least-squares coefficients c_0..c_{N-1} of Q(U) = U^N + sum c_r U^r."""
    N, q = ctx.N, ctx.q
    rows, rhs = [], []
    for u, lam in zip(points, lambdas):
        U0, U_minus, U_plus = ctx.U(u), ctx.U(u / q), ctx.U(q * u)
        phi, phi_c = ctx.phi(u), ctx.phi_crossed(u)

        def column(r):
            return lam * U0 ** r - phi * U_minus ** r - phi_c * U_plus ** r

        row = np.array([column(r) for r in range(N)], dtype=complex)
        b = ctx.H(u) - column(N)
        scale = max(np.max(np.abs(row)), abs(b))
        rows.append(row / scale)
        rhs.append(b / scale)

    A, b = np.array(rows), np.array(rhs)
    cond = float(np.linalg.cond(A))
    if not np.isfinite(cond) or cond > LSQ_CONDITION_LIMIT:
        raise IllConditioned(f"TQ least-squares system is ill-conditioned (cond={cond:.3e})", condition=cond)
    coefficients, *_ = np.linalg.lstsq(A, b, rcond=None)
    return coefficients, cond


def u_roots_of_q(coefficients):
    """Roots in U of the monic polynomial with low-order coefficients c."""
    return np.roots(np.concatenate([[1.0], coefficients[::-1]]))


def solve_bethe_roots(eigen_index, ctx, seed=0, strict=True, eigenstates=None, n_points=None):
    m = ctx.params
    N = m.N
    values, vectors = eigenstates if eigenstates is not None else transfer_eigenstates(m)
    _, psi = select_eigenstate(values, vectors, eigen_index)

    rng = np.random.default_rng([seed, eigen_index])
    points = sample_points(ctx, n_points or N + 4, rng)
    lambdas = numerical_eigenvalues(m, psi, points)
    coefficients, cond = solve_q_coefficients(ctx, points, lambdas)

    U_roots = u_roots_of_q(coefficients)
    for i in range(N):
        for j in range(i + 1, N):
            if abs(U_roots[i] - U_roots[j]) <= GENERICITY_TOL * (abs(U_roots[i]) + abs(U_roots[j])):
                raise IllConditioned(f"Near-coincident U-roots for eigenstate {eigen_index}")

    roots = tuple(lift_U_to_u(complex(U), ctx) for U in U_roots)
    residuals = tuple(bethe_residuals(roots, ctx))
    worst = max(residuals)
    logger.info(f"Eigenstate {eigen_index}: TQ cond {cond:.2e}, max scaled residual {worst:.2e}")

    if worst > ONSHELL_TOL and strict:
        raise ResidualTooLarge(f"Eigenstate {eigen_index}: scaled Bethe residual {worst:.3e} > {ONSHELL_TOL}")

    return BetheRoots(
        N=N,
        q=m.q,
        roots=roots,
        residuals=residuals,
        onshell=worst <= ONSHELL_TOL,
        eigen_index=eigen_index,
        U_values=tuple(complex(U) for U in U_roots),
    )


def solve_all_roots(ctx, seed=0, eigenstates=None):
    """Every eigenstate at desk scale. Returns (roots list, warnings)."""
    eigenstates = eigenstates if eigenstates is not None else transfer_eigenstates(ctx.params)
    solved, warnings = [], []
    for index in range(2 ** ctx.N):
        try:
            solved.append(solve_bethe_roots(index, ctx, seed=seed, eigenstates=eigenstates))
        except (IllConditioned, ResidualTooLarge, LiftFailure) as e:
            warnings.append(f"eigenstate {index}: {e}")
            logger.warning(f"Eigenstate {index} not resolved: {e}")
    return solved, warnings


def heldout_eigenvalue_error(roots, ctx, eigenstates, rng, count=10):
    """Worst relative gap between Lambda(u|roots) and the Rayleigh quotient
    of the matching eigenvector at `count` fresh points."""
    _, psi = select_eigenstate(*eigenstates, roots.eigen_index)
    points = sample_points(ctx, count, rng)
    numerical = numerical_eigenvalues(ctx.params, psi, points)
    return max(relative_error(eigenvalue_lambda(u, roots.roots, ctx), lam) for u, lam in zip(points, numerical))


def execute_solve_block(block, context):
    ctx = context["ctx"]
    eigenstates = transfer_eigenstates(ctx.params)
    roots, warnings = solve_all_roots(ctx, context["seed"], eigenstates)

    rng = suite_rng(context["seed"], "solve")
    count = block.params.get("heldout_points", 10)
    worst_residual = max((max(r.residuals) for r in roots), default=float("inf"))
    worst_eigenvalue = max(
        (heldout_eigenvalue_error(r, ctx, eigenstates, rng, count) for r in roots),
        default=float("inf"),
    )
    expected = 2 ** ctx.N

    context["checks"].extend([
        CheckRecord.below("bethe_equations", "onshell", worst_residual, ONSHELL_TOL, solved=len(roots)),
        CheckRecord.below("eigenvalue_heldout", "eigenvalue", worst_eigenvalue, EIGENVALUE_TOL, points=count),
        CheckRecord.below(
            "root_completeness", "completeness", expected - len(roots), 0, hard=False,
            unresolved=[w.split(":")[0] for w in warnings],
        ),
    ])
    context["roots"] = roots
    context["eigenstates"] = eigenstates
    context["warnings"].extend(warnings)
    logger.info(f"Solved {len(roots)}/{expected} eigenstates, worst residual {worst_residual:.3e}")
    return context


def solved_roots(context):
    """The on-shell root sets produced upstream by the solve block."""
    roots = context["roots"]
    if not roots:
        raise ValueError("No eigenstate was solved on shell; nothing to pair with")
    return roots
