import pytest

from openxxz.params.sampling import sample_generic_params
from openxxz.spectral.functions import SpectralContext
from openxxz.spectral.solver import solve_all_roots


@pytest.fixture(scope="session")
def params1():
    return sample_generic_params(11, 1)


@pytest.fixture(scope="session")
def params2():
    return sample_generic_params(7, 2)


@pytest.fixture(scope="session")
def params3():
    return sample_generic_params(3, 3)


@pytest.fixture(scope="session")
def ctx1(params1):
    return SpectralContext.from_params(params1)


@pytest.fixture(scope="session")
def ctx2(params2):
    return SpectralContext.from_params(params2)


@pytest.fixture(scope="session")
def roots1(ctx1):
    roots, _ = solve_all_roots(ctx1, seed=11)
    return roots


@pytest.fixture(scope="session")
def roots2(ctx2):
    roots, _ = solve_all_roots(ctx2, seed=7)
    return roots


@pytest.fixture(scope="session")
def ctx3(params3):
    return SpectralContext.from_params(params3)


@pytest.fixture(scope="session")
def roots3(ctx3):
    roots, _ = solve_all_roots(ctx3, seed=3)
    return roots
