import cmath

import numpy as np
import pytest

from openxxz.params.boundary import (
    derive_hamiltonian_couplings,
    derive_sklyanin_entries,
    modified_constants,
    scalar_pochhammer_arguments,
)
from openxxz.params.qspecial import q_pochhammer, require_nonvanishing_pochhammer
from openxxz.params.sampling import sample_generic_params, sample_offshell_roots, trial_rng, is_separated
from openxxz.params.serialization import params_from_text, params_to_text
from openxxz.schemas.params import BoundaryParams, ModelParams
from openxxz.spectral.functions import SpectralContext
from openxxz.utils.exceptions import (
    DegenerateBoundary,
    GenericityFailure,
    PochhammerZero,
    SingularGamma,
    ZeroParameter,
)

tol = 1e-12

Q = 1.3 * cmath.exp(0.5j)


def make_params(N=1, q=Q, **boundary):
    values = dict(kappa=0.9, kappa_tilde=1.1, tau=1.0, tau_tilde=2.0, xi=1.4, xi_tilde=0.7, mu=1.0, mu_tilde=2.0)
    values.update(boundary)
    x = tuple(1.05 * cmath.exp(0.1j * j) for j in range(N))
    return ModelParams(N=N, q=q, x=x, boundary=BoundaryParams(**values))


def test_sklyanin_entries_by_hand():
    b = make_params().boundary
    s = derive_sklyanin_entries(b)
    # i * tau_tilde * tau * (mu/mu_tilde + mu_tilde/mu) = 2i * (1/2 + 2)
    assert abs(s.nu_minus - 5j) < tol, "nu_minus does not match"
    # i * tau_tilde * tau * (mu mu_tilde + 1/(mu mu_tilde)) = 2i * (2 + 1/2)
    assert abs(s.nu_plus - 5j) < tol, "nu_plus does not match"
    expected_eps_minus = 1j * 1.1 * 0.9 * (1.4 / 0.7 + 0.7 / 1.4)
    assert abs(s.eps_minus - expected_eps_minus) < tol, "eps_minus does not match"


def test_boundary_squares():
    sq = make_params().boundary.squares()
    assert abs(sq["tau_tilde"] - 4.0) < tol
    assert abs(sq["kappa"] - 0.81) < tol
    assert abs(sq["kappa_tilde"] - 1.21) < tol


def test_sklyanin_entries_need_nonzero_mu():
    with pytest.raises(ZeroParameter):
        derive_sklyanin_entries(make_params(mu=0).boundary)


def test_kappa_plus_vanishes_linearly_with_kappa_tilde():
    small = derive_hamiltonian_couplings(make_params(kappa_tilde=1e-4)).kappa_plus / 1e-4
    smaller = derive_hamiltonian_couplings(make_params(kappa_tilde=1e-6)).kappa_plus / 1e-6
    assert abs(small - smaller) <= 1e-10 * abs(small), "kappa_plus / kappa_tilde should be constant"


def test_couplings_degenerate_at_zero_kappa_tilde():
    with pytest.raises(DegenerateBoundary):
        derive_hamiltonian_couplings(make_params(kappa_tilde=0))


def test_gamma_three_term_recurrence():
    constants = modified_constants(sample_generic_params(5, 2))
    q = constants.q
    for m in np.random.default_rng(6).integers(-12, 13, size=20):
        m = int(m)
        lhs = constants.gamma(m + 2) + constants.gamma(m - 2)
        rhs = (q ** 2 + q ** -2) * constants.gamma(m)
        scale = constants.gamma_scale(m + 2) + constants.gamma_scale(m - 2)
        assert abs(lhs - rhs) <= tol * scale, f"m={m}: {abs(lhs - rhs):.3e}"


def test_singular_gamma_reports_offending_index():
    # alpha/beta = (xi/xi_tilde)^2 q^{4N}; gamma_1 = 0 when this equals q^2
    m = make_params(N=1, xi=1 / Q, xi_tilde=1.0)
    with pytest.raises(SingularGamma) as err:
        modified_constants(m)
    assert 1 in err.value.indices


def test_q_pochhammer_matches_product():
    b, q = 0.3 + 0.2j, 0.8 * cmath.exp(0.3j)
    expected = np.prod([1 - b * q ** k for k in range(4)])
    assert abs(q_pochhammer(b, q, 4) - expected) < tol
    assert q_pochhammer(b, q, 0) == 1


def test_q_pochhammer_zero_factor_rejected():
    q = 0.8 * cmath.exp(0.3j)
    with pytest.raises(PochhammerZero):
        require_nonvanishing_pochhammer(1 / q ** 2, q, 3, "test")


def test_scalar_pochhammer_arguments_lengths():
    m = make_params(N=2)
    args = scalar_pochhammer_arguments(m)
    assert set(args) == {"eta_numerator", "eta_xi_denominator", "nu_first", "nu_second"}
    assert all(n == 2 for _, _, n in args.values())
    assert abs(args["eta_xi_denominator"][1] - Q ** 4) < tol


def test_root_of_unity_rejected():
    with pytest.raises(ValueError):
        make_params(q=1j)


def test_infinite_boundary_rejected():
    with pytest.raises(ValueError):
        make_params(tau=complex("inf"))


def test_sampling_is_reproducible():
    assert sample_generic_params(5, 3) == sample_generic_params(5, 3)
    assert sample_generic_params(5, 3) != sample_generic_params(6, 3)


def test_sampling_rejects_empty_chain():
    with pytest.raises(ValueError):
        sample_generic_params(0, 0)


def test_sampling_fails_when_genericity_is_impossible(monkeypatch):
    import openxxz.params.sampling as sampling

    def always_degenerate(m):
        raise ValueError("degenerate")

    monkeypatch.setattr(sampling, "check_generic", always_degenerate)
    with pytest.raises(GenericityFailure):
        sampling.sample_generic_params(0, 2, max_tries=3)


def test_homogeneous_sampling_sets_unit_inhomogeneities():
    m = sample_generic_params(2, 3, mode="homogeneous")
    assert all(x == 1 for x in m.x)


def test_trial_substreams_are_independent_and_reproducible():
    a = trial_rng(4, 0).uniform(size=3)
    assert np.allclose(a, trial_rng(4, 0).uniform(size=3), atol=0)
    assert not np.allclose(a, trial_rng(4, 1).uniform(size=3))


def test_offshell_roots_are_separated(params2):
    ctx = SpectralContext.from_params(params2)
    roots = sample_offshell_roots(np.random.default_rng(0), 3, ctx)
    assert len(roots) == 3
    assert is_separated(ctx, roots)


def test_params_text_round_trip(params2):
    text = params_to_text(params2)
    assert text.startswith("N=2\n")
    assert params_from_text(text) == params2


def test_params_text_missing_key():
    text = params_to_text(make_params()).replace("tau_tilde", "tau_tild")
    with pytest.raises(ValueError):
        params_from_text(text)
