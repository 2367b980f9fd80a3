"""Products over parameter sets: F(u), dU(u), Delta(u), Delta'(u)."""
from openxxz.config import GENERICITY_TOL


def F_product(roots, ctx):
    out = 1.0 + 0j
    for u in roots:
        out *= ctx.F(u)
    return out


def dU_product(roots, ctx):
    out = 1.0 + 0j
    for u in roots:
        out *= ctx.dU(u)
    return out


def delta(roots, ctx):
    """prod_{i<j} Q(u_i, u_j)"""
    out = 1.0 + 0j
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            out *= ctx.Q(roots[i], roots[j])
    return out


def delta_prime(roots, ctx):
    """prod_{i>j} Q(u_i, u_j)"""
    out = 1.0 + 0j
    for i in range(len(roots)):
        for j in range(i):
            out *= ctx.Q(roots[i], roots[j])
    return out


def u_collisions(roots, ctx, tol=GENERICITY_TOL):
    """Index pairs (i, j), i < j, with U(u_i) = U(u_j) to relative `tol`."""
    pairs = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            Ui, Uj = ctx.U(roots[i]), ctx.U(roots[j])
            if abs(Ui - Uj) <= tol * (abs(Ui) + abs(Uj)):
                pairs.append((i, j))
    return pairs
