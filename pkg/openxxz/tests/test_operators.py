import cmath

import numpy as np
import pytest

from openxxz.operators.checks import (
    SWAP,
    check_hamiltonian,
    check_reflection_equations,
    check_rtt,
    check_transfer_family,
    check_yang_baxter,
    homogeneous_point,
)
from openxxz.operators.export import export_operator, import_operator
from openxxz.operators.hamiltonian import hamiltonian_direct, hamiltonian_from_transfer
from openxxz.operators.kmatrix import k_minus, k_minus_derivative, k_plus, k_plus_derivative
from openxxz.operators.local import SIGMA_MINUS, SIGMA_PLUS, unit
from openxxz.operators.monodromy import (
    double_row_operators,
    hat_monodromy,
    hat_monodromy_matrix,
    monodromy,
    monodromy_matrix,
    reflection_monodromy,
)
from openxxz.operators.rmatrix import r_matrix, r_matrix_derivative
from openxxz.operators.transfer import crossing_point, transfer_matrix, transfer_matrix_derivative
from openxxz.params.sampling import sample_generic_params
from openxxz.utils.exceptions import CrossingSingularity, SingularParameter

tol = 1e-12
fd_step = 1e-6
fd_tol = 1e-5

U = 1.2 * cmath.exp(0.7j)
V = 0.8 * cmath.exp(-0.4j)


def test_r_matrix_is_permutation_at_one():
    q = 1.3 * cmath.exp(0.5j)
    assert np.allclose(r_matrix(1.0, q), SWAP, atol=tol), "R(1) should be the permutation"


def test_r_matrix_rejects_zero():
    with pytest.raises(SingularParameter):
        r_matrix(0, 1.3)


def test_sigma_conventions():
    up, down = np.array([1, 0]), np.array([0, 1])
    assert np.allclose(SIGMA_PLUS @ down, up)
    assert np.allclose(SIGMA_MINUS @ up, down)
    assert np.allclose(unit(0, 1), SIGMA_PLUS)


def test_yang_baxter_random_draws():
    check = check_yang_baxter(100, np.random.default_rng(0))
    assert check.passed, f"Yang-Baxter residual {check.value:.3e}"


def test_reflection_equations(params2):
    report = check_reflection_equations(params2, 50, np.random.default_rng(1))
    assert report.passed, [(c.name, c.value) for c in report.checks]


def test_k_minus_is_proportional_to_identity_at_one(params2):
    # u - 1/u and u^2 - u^-2 vanish at u = 1: K^-(1) = (nu_- + nu_+) Id
    K = k_minus(1.0, params2)
    assert np.allclose(K, K[0, 0] * np.eye(2), atol=tol)


def test_k_derivatives_finite_difference(params2):
    for K, dK in ((k_minus, k_minus_derivative), (k_plus, k_plus_derivative)):
        numeric = (K(U + fd_step, params2) - K(U - fd_step, params2)) / (2 * fd_step)
        assert np.allclose(numeric, dK(U, params2), rtol=fd_tol, atol=fd_tol)


def test_r_derivative_finite_difference():
    q = 1.3 * cmath.exp(0.5j)
    numeric = (r_matrix(U + fd_step, q) - r_matrix(U - fd_step, q)) / (2 * fd_step)
    assert np.allclose(numeric, r_matrix_derivative(U, q), rtol=fd_tol, atol=fd_tol)


def test_transfer_matrix_single_site_by_hand(params1):
    """Tr_a K+_a R_a1(u/x) K-_a R_a1(u x), written out with explicit Kronecker products."""
    m = params1
    x = m.x[0]
    R1, R2 = r_matrix(U / x, m.q), r_matrix(U * x, m.q)
    Km, Kp = np.kron(k_minus(U, m), np.eye(2)), np.kron(k_plus(U, m), np.eye(2))
    full = Kp @ R1 @ Km @ R2
    # aux is the slow index: the partial trace sums the diagonal 2x2 blocks
    expected = sum(full[2 * a:2 * a + 2, 2 * a:2 * a + 2] for a in range(2))
    assert np.allclose(transfer_matrix(U, m), expected, atol=tol)


@pytest.mark.parametrize("seed,N", [(11, 1), (7, 2), (3, 3), (5, 4)])
def test_transfer_family(seed, N):
    checks = check_transfer_family(sample_generic_params(seed, N), 5, np.random.default_rng(2))
    assert all(c.passed for c in checks), [(N, c.name, c.value) for c in checks]


def test_transfer_crossing_symmetry(params2):
    t = transfer_matrix(U, params2)
    t_cross = transfer_matrix(crossing_point(U, params2.q), params2)
    assert np.linalg.norm(t - t_cross) <= 1e-11 * np.linalg.norm(t)


def test_rtt_relation(params2):
    check = check_rtt(params2, 3, np.random.default_rng(3))
    assert check.passed, f"RTT residual {check.value:.3e}"


def test_transfer_derivative_finite_difference(params2):
    numeric = (transfer_matrix(U + fd_step, params2) - transfer_matrix(U - fd_step, params2)) / (2 * fd_step)
    analytic = transfer_matrix_derivative(U, params2)
    assert np.linalg.norm(numeric - analytic) <= fd_tol * np.linalg.norm(analytic)


def test_monodromy_blocks_reassemble(params2):
    T = monodromy(U, params2)
    assert T.dim == 4
    assert np.allclose(T.full(), monodromy_matrix(U, params2), atol=tol)
    T_hat = hat_monodromy(U, params2)
    assert np.allclose(T_hat.full(), hat_monodromy_matrix(U, params2), atol=tol)


def test_double_row_rejects_crossing_pole(params2):
    q = params2.q
    u_pole = (1 / q) ** 0.5
    with pytest.raises(CrossingSingularity):
        double_row_operators(u_pole, params2)


def test_double_row_b_is_reflection_block(params2):
    K = reflection_monodromy(U, params2)
    ops = double_row_operators(U, params2)
    assert np.allclose(ops.b, K[:4, 4:], atol=tol)
    assert np.allclose(ops.a, K[:4, :4], atol=tol)


@pytest.mark.parametrize("N", [2, 3])
def test_hamiltonian_reconstruction(N):
    check = check_hamiltonian(sample_generic_params(20 + N, N))
    assert check.passed, f"Hamiltonian residual {check.value:.3e}"


def test_hamiltonian_direct_two_sites_by_hand(params2):
    m = homogeneous_point(params2)
    H = hamiltonian_direct(m)
    assert H.shape == (4, 4)
    # flip-flop amplitude <01|H|10> from sx sx + sy sy; boundary fields flip one spin only
    assert abs(H[1, 2] - 2) < tol
    assert abs(H[2, 1] - 2) < tol


def test_hamiltonian_needs_two_sites(params1):
    with pytest.raises(ValueError):
        hamiltonian_direct(homogeneous_point(params1))


def test_hamiltonian_from_transfer_needs_homogeneous(params2):
    with pytest.raises(ValueError):
        hamiltonian_from_transfer(params2)


def test_export_import():
    matrix = np.array([[1 + 2j, 0.1], [np.pi, -1j / 3]])
    text = export_operator(matrix)
    assert text.splitlines()[0] == "2 2"
    assert np.array_equal(import_operator(text), matrix)


def test_import_rejects_short_rows():
    with pytest.raises(ValueError):
        import_operator("2 2\n1.0 0.0 2.0 0.0\n")
