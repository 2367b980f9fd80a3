from openxxz.config import GENERICITY_TOL
from openxxz.schemas.roots import BetheRoots
from openxxz.utils.exceptions import PoleAtRoot


def as_roots(roots):
    if isinstance(roots, BetheRoots):
        return tuple(roots.roots)
    return tuple(complex(r) for r in roots)


def without(roots, i):
    return roots[:i] + roots[i + 1:]


def replaced(roots, i, u):
    """{u, u-bar_i}: u_i replaced by u in the same position."""
    return roots[:i] + (u,) + roots[i + 1:]


def bethe_terms(u, roots, ctx):
    """The three terms phi(u)Q(u/q, u-bar), phi(1/(qu))Q(qu, u-bar), H(u)."""
    roots = as_roots(roots)
    q = ctx.q
    return (
        ctx.phi(u) * ctx.Q_set(u / q, roots),
        ctx.phi_crossed(u) * ctx.Q_set(q * u, roots),
        ctx.H(u),
    )


def bethe_function_Y(u, roots, ctx):
    return sum(bethe_terms(u, roots, ctx))


def eigenvalue_lambda(u, roots, ctx):
    roots = as_roots(roots)
    Uu = ctx.U(u)
    for j, r in enumerate(roots):
        Ur = ctx.U(r)
        if abs(Uu - Ur) <= GENERICITY_TOL * (abs(Uu) + abs(Ur)):
            raise PoleAtRoot(f"u = {u} collides with root u_{j + 1} = {r} in U")
    return bethe_function_Y(u, roots, ctx) / ctx.Q_set(u, roots)


def bethe_function_partial(w, roots, j, ctx):
    """d/du_j Y(w|u-bar); H(w) does not depend on the roots."""
    roots = as_roots(roots)
    rest = without(roots, j)
    q = ctx.q
    return -ctx.dU(roots[j]) * (
        ctx.phi(w) * ctx.Q_set(w / q, rest) + ctx.phi_crossed(w) * ctx.Q_set(q * w, rest)
    )


def lambda_partial_v(u, roots, i, ctx):
    """d/dv_i Lambda(u|v-bar) by the quotient rule."""
    roots = as_roots(roots)
    rest = without(roots, i)
    q = ctx.q
    lam = eigenvalue_lambda(u, roots, ctx)
    numerator_partial = -ctx.dU(roots[i]) * (
        ctx.phi(u) * ctx.Q_set(u / q, rest) + ctx.phi_crossed(u) * ctx.Q_set(q * u, rest)
    )
    denominator_partial = -ctx.dU(roots[i]) * ctx.Q_set(u, rest)
    return (numerator_partial - lam * denominator_partial) / ctx.Q_set(u, roots)


def onshell_scale(u, roots, ctx):
    return max(abs(t) for t in bethe_terms(u, roots, ctx))


def bethe_residuals(roots, ctx):
    """|Y(u_i|u-bar)| relative to the size of its three terms, per root."""
    roots = as_roots(roots)
    residuals = []
    for u in roots:
        scale = onshell_scale(u, roots, ctx)
        residuals.append(float(abs(bethe_function_Y(u, roots, ctx)) / scale) if scale > 0 else 0.0)
    return residuals
