from openxxz.operators.kmatrix import k_minus, k_minus_derivative, k_plus, k_plus_derivative
from openxxz.operators.local import aux_blocks, aux_lift
from openxxz.operators.monodromy import reflection_monodromy
from openxxz.operators.rmatrix import r_aux_site
from openxxz.utils.exceptions import SingularParameter


def aux_trace(K2, full):
    """Tr_a(K_a full) for a 2x2 auxiliary matrix K and an aux x quantum operator."""
    blocks = aux_blocks(full)
    # blocks are (00, 01, 10, 11); Tr(K X) = sum_ab K_ab X_ba
    return K2[0, 0] * blocks[0] + K2[0, 1] * blocks[2] + K2[1, 0] * blocks[1] + K2[1, 1] * blocks[3]


def transfer_matrix(u, m, dtype=complex):
    if u == 0:
        raise SingularParameter("Transfer matrix needs u != 0")
    return aux_trace(k_plus(u, m, dtype), reflection_monodromy(u, m, dtype))


def _factors_with_derivatives(u, m, dtype):
    q, N = m.q, m.N
    pairs = []
    for j, xj in enumerate(m.x):
        pairs.append((
            r_aux_site(u / xj, q, j, N, dtype),
            r_aux_site(u / xj, q, j, N, dtype, derivative=True) / dtype(xj),
        ))
    pairs.append((aux_lift(k_minus(u, m, dtype), N, dtype), aux_lift(k_minus_derivative(u, m, dtype), N, dtype)))
    for j in reversed(range(N)):
        xj = m.x[j]
        pairs.append((
            r_aux_site(u * xj, q, j, N, dtype),
            r_aux_site(u * xj, q, j, N, dtype, derivative=True) * dtype(xj),
        ))
    return pairs


def product_with_derivative(pairs):
    """(P, P') for P = F_1 F_2 ... F_n given (F_k, F_k') pairs (product rule)."""
    product, derivative = None, None
    for f, df in pairs:
        if product is None:
            product, derivative = f, df
        else:
            derivative = derivative @ f + product @ df
            product = product @ f
    return product, derivative


def transfer_matrix_derivative(u, m, dtype=complex):
    """t'(u), analytic: every factor of Tr_a(K+ T K- T-hat) is Laurent in u."""
    if u == 0:
        raise SingularParameter("Transfer matrix needs u != 0")
    product, derivative = product_with_derivative(_factors_with_derivatives(u, m, dtype))
    return (
        aux_trace(k_plus_derivative(u, m, dtype), product)
        + aux_trace(k_plus(u, m, dtype), derivative)
    )


def crossing_point(u, q):
    return 1 / (q * u)
