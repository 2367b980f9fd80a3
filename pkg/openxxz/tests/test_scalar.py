import cmath

import numpy as np
import pytest

from openxxz.config import SCALAR_TOL
from openxxz.params.sampling import sample_generic_params, sample_offshell_roots
from openxxz.scalar.asymptotics import asymptotic_scalar_suite
from openxxz.scalar.determinants import determinant_crosschecks, determinant_routes
from openxxz.scalar.formula import (
    eta_value,
    nu_determinant,
    nu_identity_check,
    nu_pochhammer,
    orbit_consistency,
    permutation_consistency,
    scalar_product_determinant,
    xi_matrix,
)
from openxxz.scalar.products import delta, delta_prime, u_collisions
from openxxz.scalar.system import build_linear_system, lagrange_identity_residuals, linear_system_checks
from openxxz.scalar import trials as trials_module
from openxxz.scalar.trials import run_scalar_trials, scalar_trial_checks
from openxxz.spectral.functions import SpectralContext
from openxxz.spectral.solver import solve_all_roots
from openxxz.utils.exceptions import DegenerateDenominator, IllConditioned, OffShellDual

tol = 1e-10

U = 1.2 * cmath.exp(0.7j)
W = 0.9 * cmath.exp(-1.3j)


def best_error(u, v, m):
    return min(scalar_product_determinant(u, v, m, branch).relative_error for branch in (1, -1))


def test_xi_matrix_single_site():
    assert np.allclose(xi_matrix(1.3 * cmath.exp(0.4j), 1.7j, 1), [[1.0]], atol=tol)


def test_nu_single_site_by_hand(params1):
    b = params1.boundary
    by_hand = (
        (b.kappa_tilde * b.tau_tilde) ** 2
        + (b.kappa * b.tau) ** 2
        + b.kappa * b.kappa_tilde * b.tau * b.tau_tilde
        * (b.mu * b.xi_tilde / (b.mu_tilde * b.xi) + b.mu_tilde * b.xi / (b.mu * b.xi_tilde))
    )
    assert abs(nu_determinant(params1) - by_hand) <= tol * abs(by_hand)
    assert abs(nu_pochhammer(params1) - by_hand) <= tol * abs(by_hand)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_nu_determinant_equals_product(N):
    check = nu_identity_check(sample_generic_params(40 + N, N))
    assert check.passed, f"N={N}: {check.value:.3e}"


def test_nu_determinant_independent_of_point(params3):
    a, b = nu_determinant(params3), nu_determinant(params3, 0.9 * cmath.exp(1.1j))
    assert abs(a - b) <= tol * abs(a)


def test_eta_branches_differ_by_sign_power(params3):
    assert abs(eta_value(params3, -1) + eta_value(params3, 1)) <= tol * abs(eta_value(params3, 1))


def test_empty_products(ctx1):
    assert delta((U,), ctx1) == 1
    assert delta_prime((U,), ctx1) == 1


def test_collisions_detected(ctx2):
    assert u_collisions((U, -U), ctx2) == [(0, 1)]
    assert u_collisions((U, W), ctx2) == []


def test_scalar_product_single_site(params1, ctx1, roots1):
    rng = np.random.default_rng(0)
    for v in roots1:
        u = sample_offshell_roots(rng, 1, ctx1, avoid=v.roots)
        assert best_error(u, v, params1) <= SCALAR_TOL


def test_scalar_product_two_sites(params2, ctx2, roots2):
    rng = np.random.default_rng(1)
    for v in roots2:
        u = sample_offshell_roots(rng, 2, ctx2, avoid=v.roots)
        assert best_error(u, v, params2) <= SCALAR_TOL


def test_scalar_product_three_sites(params3, ctx3, roots3):
    assert len(roots3) == 2 ** 3, "every eigenstate should be solved"
    rng = np.random.default_rng(8)
    for v in roots3:
        u = sample_offshell_roots(rng, 3, ctx3, avoid=v.roots)
        error = best_error(u, v, params3)
        assert error <= SCALAR_TOL, f"eigenstate {v.eigen_index}: {error:.3e}"


def test_scalar_product_needs_onshell_dual(params2):
    with pytest.raises(OffShellDual):
        scalar_product_determinant((U, W), (1.1 * cmath.exp(0.3j), 0.7 * cmath.exp(2.0j)), params2)


def test_scalar_product_rejects_colliding_u(params2, roots2):
    with pytest.raises(DegenerateDenominator):
        scalar_product_determinant((U, -U), roots2[0], params2)


def test_scalar_product_wrong_count(params2, roots2):
    with pytest.raises(ValueError):
        scalar_product_determinant((U,), roots2[0], params2)


def test_orbit_and_permutation_invariance(params2, ctx2, roots2):
    v = roots2[0]
    u = sample_offshell_roots(np.random.default_rng(2), 2, ctx2, avoid=v.roots)
    branch = 1 if scalar_product_determinant(u, v, params2, 1).relative_error <= SCALAR_TOL else -1
    checks = orbit_consistency(u, v, params2, branch=branch) + permutation_consistency(u, v, params2, branch=branch)
    assert all(c.passed for c in checks), [(c.name, c.value) for c in checks]


@pytest.mark.parametrize("seed,N", [(11, 1), (7, 2), (3, 3)])
def test_determinant_routes_agree(seed, N):
    m = sample_generic_params(seed, N)
    ctx = SpectralContext.from_params(m)
    roots, _ = solve_all_roots(ctx, seed=seed)
    rng = np.random.default_rng(seed)
    for v in roots[:3]:
        u = sample_offshell_roots(rng, N, ctx, avoid=v.roots)
        report = determinant_crosschecks(u, v, ctx)
        assert report.passed, [(c.name, c.value) for c in report.checks if not c.passed]


def test_determinant_routes_keys(ctx2, roots2):
    u = sample_offshell_roots(np.random.default_rng(3), 2, ctx2, avoid=roots2[0].roots)
    routes = determinant_routes(u, roots2[0], ctx2)
    assert {"direct", "bethe_function", "b_transformed", "jacobian"} <= set(routes)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_linear_system(request, N):
    m = request.getfixturevalue(f"params{N}")
    ctx = request.getfixturevalue(f"ctx{N}")
    rng = np.random.default_rng(4)
    for v in request.getfixturevalue(f"roots{N}"):
        u_ext = sample_offshell_roots(rng, N + 1, ctx, avoid=v.roots)
        system = build_linear_system(u_ext, v, ctx, rng=rng)
        assert system.N == N
        report = linear_system_checks(system, m, ctx)
        assert report.passed, [(N, v.eigen_index, c.name, c.value) for c in report.checks if not c.passed]


def test_linear_system_needs_one_extra_parameter(ctx2, roots2):
    with pytest.raises(ValueError):
        build_linear_system((U, W), roots2[0], ctx2)


def test_lagrange_identities_for_offshell_sets(ctx2):
    rng = np.random.default_rng(5)
    u_ext = sample_offshell_roots(rng, 3, ctx2)
    w = sample_offshell_roots(rng, 3, ctx2, avoid=u_ext)
    assert lagrange_identity_residuals(u_ext, w, (ctx2.q, 0.83 + 0.41j), ctx2) <= 1e-11


def test_scalar_trials_single_site(params1, roots1):
    records, branch = run_scalar_trials(params1, roots1, seed=3, trials=4, n_jobs=1)
    assert [r.index for r in records] == [0, 1, 2, 3]
    assert branch in (1, -1)
    assert all(r.branch == branch for r in records)
    assert all(r.passed for r in records), [(r.index, r.relative_error, r.note) for r in records]
    assert all(c.passed for c in scalar_trial_checks(records))


def test_scalar_trials_lock_branch_after_unresolved_first_trial(monkeypatch, params1, roots1):
    original = trials_module._draw_well_conditioned
    requested = []

    def draw(m, v, rng, ctx, branch, dtype):
        requested.append(tuple(branch))
        if len(requested) == 1:
            raise IllConditioned("forced", condition=1e12)
        return original(m, v, rng, ctx, branch, dtype)

    monkeypatch.setattr(trials_module, "_draw_well_conditioned", draw)
    records, branch = run_scalar_trials(params1, roots1, seed=3, trials=3, n_jobs=1)

    assert requested[:2] == [trials_module.BRANCHES, trials_module.BRANCHES]
    assert requested[2:] == [(branch,)]
    assert not records[0].passed and np.isnan(records[0].relative_error)
    assert records[1].branch == branch
    assert all(r.passed for r in records[1:]), [(r.index, r.relative_error) for r in records]


def test_scalar_trials_reproducible(params1, roots1):
    first, _ = run_scalar_trials(params1, roots1, seed=9, trials=2)
    second, _ = run_scalar_trials(params1, roots1, seed=9, trials=2)
    assert [r.model_dump() for r in first] == [r.model_dump() for r in second]


def test_scalar_trials_need_roots(params1):
    with pytest.raises(ValueError):
        run_scalar_trials(params1, [], seed=0, trials=1)


def test_scalar_asymptotics_single_site(params1, roots1):
    report = asymptotic_scalar_suite(roots1[0], params1)
    assert report.passed, [(c.name, c.value) for c in report.checks if not c.passed]


def test_scalar_asymptotics_two_sites_extended(params2, roots2):
    report = asymptotic_scalar_suite(roots2[0], params2, dtype=np.clongdouble)
    assert report.passed, [(c.name, c.value) for c in report.checks if not c.passed]
