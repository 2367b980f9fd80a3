import cmath

import numpy as np
import pytest

from openxxz.operators.monodromy import double_row_operators
from openxxz.params.boundary import modified_constants
from openxxz.params.sampling import sample_generic_params, sample_offshell_roots
from openxxz.params.serialization import vector_to_text
from openxxz.schemas.roots import BetheVector
from openxxz.spectral.functions import SpectralContext
from openxxz.utils.exceptions import PoleCollision
from openxxz.vectors.asymptotics import a_eigenvalue_residual, asymptotic_operator_suite, asymptotic_operators
from openxxz.vectors.bethe import bethe_components, bra_m_sequence, build_bethe_vector, ket_m_sequence, pair
from openxxz.vectors.modified import modified_creation, modified_operators
from openxxz.vectors.offshell import offshell_residual, offshell_sides, onshell_bra_check
from openxxz.vectors.reference import reference_overlap, reference_states

tol = 1e-12

U = 1.2 * cmath.exp(0.7j)
W = 0.9 * cmath.exp(-1.3j)


def test_m_sequences():
    assert ket_m_sequence(3) == (4, 2, 0)
    assert bra_m_sequence(3) == (2, 4, 6)


def test_reference_overlap(params3):
    states = reference_states(params3)
    assert states["ket_N"].shape == (8,)
    overlap = pair(states["bra_N"], states["ket_N"])
    assert abs(overlap - reference_overlap(params3)) <= tol * abs(overlap)


def test_build_bethe_vector(params2):
    vector = build_bethe_vector((U, W), "ket", params2)
    assert vector.m_sequence == (2, 0)
    assert vector.components.shape == (4,)
    assert vector.norm() > 0


def test_bethe_vector_rejects_wrong_sequence(params2):
    vector = build_bethe_vector((U, W), "bra", params2)
    with pytest.raises(ValueError):
        BetheVector(components=vector.components, params=vector.params, side="bra", m_sequence=(4, 2))


def test_bethe_components_wrong_count(params2):
    with pytest.raises(ValueError):
        bethe_components((U,), "ket", params2)
    with pytest.raises(ValueError):
        bethe_components((U, W), "sideways", params2)


def test_vector_text_block(params2):
    text = vector_to_text(build_bethe_vector((U, W), "ket", params2))
    assert text.startswith("N=2\n")
    assert "side=ket" in text
    assert "m_sequence=2,0" in text


def test_modified_operators_keys(params1):
    ops = modified_operators(U, 0, params1)
    assert set(ops) == {"Bmod", "Cmod"}
    assert ops["Bmod"].shape == (2, 2)


def test_modified_creation_continues_to_plain_creation(params2):
    """gamma_{m+1}/(q u) B(u, m) -> B(u) as kappa_tilde -> 0, at first order."""
    deviations = []
    for kappa_tilde in (1e-5, 1e-6):
        m = params2.with_boundary(kappa_tilde=kappa_tilde)
        gamma = modified_constants(m, check_range=False).gamma(1)
        scaled = gamma / (m.q * U) * modified_creation(U, 0, m)
        plain = double_row_operators(U, m).b
        deviations.append(np.linalg.norm(scaled - plain) / np.linalg.norm(plain))
    assert deviations[1] < 1e-3
    assert 5 < deviations[0] / deviations[1] < 20, deviations


@pytest.mark.parametrize("seed,N", [(11, 1), (7, 2), (3, 3)])
def test_offshell_relations(seed, N):
    m = sample_generic_params(seed, N)
    ctx = SpectralContext.from_params(m)
    rng = np.random.default_rng(seed)
    for _ in range(3):
        roots = sample_offshell_roots(rng, N, ctx)
        probe = sample_offshell_roots(rng, 1, ctx, avoid=roots)[0]
        report = offshell_residual(roots, m, probe)
        assert report.passed, [(c.name, c.value) for c in report.checks]


def test_offshell_probe_on_root_collides(params2):
    with pytest.raises(PoleCollision):
        offshell_sides((U, W), "ket", params2, U)


def test_onshell_dual_is_left_eigenvector(params2, roots2):
    for v in roots2:
        check = onshell_bra_check(v, params2, 1.1 * cmath.exp(0.2j))
        assert check.passed, f"eigen_index {v.eigen_index}: {check.value:.3e}"


@pytest.mark.parametrize("seed,N", [(11, 1), (7, 2), (3, 3), (5, 4)])
def test_a_eigenvalue_on_reference_state(seed, N):
    m = sample_generic_params(seed, N)
    assert a_eigenvalue_residual(asymptotic_operators(m), m) <= tol


@pytest.mark.parametrize("seed,N", [(11, 1), (7, 2), (3, 3), (5, 4)])
def test_operator_asymptotics_suite(seed, N):
    report = asymptotic_operator_suite(sample_generic_params(seed, N))
    assert report.passed, [(c.name, c.value) for c in report.checks if not c.passed]
