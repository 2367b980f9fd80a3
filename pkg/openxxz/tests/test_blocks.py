import pytest

from openxxz.orchestrator.dispatcher import SUITE_EXECUTORS, SUITE_REQUIREMENTS, execute_block
from openxxz.params.sampling import execute_params_block
from openxxz.schemas.pipeline import SuiteBlock


def params_context(N=1, seed=11):
    context = {}
    execute_params_block(SuiteBlock(id="params", type="params", params={"seed": seed, "N": N}), context)
    return context


def test_requirements_cover_every_executor():
    assert set(SUITE_EXECUTORS) == set(SUITE_REQUIREMENTS)


def test_params_block_fills_context():
    context = params_context()
    assert {"seed", "params", "ctx", "dtype", "checks", "warnings"} <= set(context)
    assert context["params"].N == 1


def test_unknown_suite_type():
    with pytest.raises(ValueError, match="Unknown suite type"):
        execute_block(SuiteBlock(id="x", type="plotting"), {})


def test_missing_inputs_named():
    with pytest.raises(ValueError, match=r"missing required inputs: \['params'"):
        execute_block(SuiteBlock(id="r", type="reflection"), {"seed": 0, "checks": []})


def test_hamiltonian_skipped_for_single_site():
    context = params_context(N=1)
    execute_block(SuiteBlock(id="hamiltonian", type="hamiltonian"), context)
    assert context["checks"] == []
    assert any("N >= 2" in w for w in context["warnings"])


def test_scalar_suites_need_solved_roots():
    context = params_context(N=1)
    context["roots"] = []
    with pytest.raises(ValueError, match="failed: No eigenstate was solved"):
        execute_block(SuiteBlock(id="linear_system", type="linear_system"), context)


def test_nu_identity_block():
    context = params_context(N=2, seed=7)
    execute_block(SuiteBlock(id="nu", type="nu_identity"), context)
    names = [c.name for c in context["checks"]]
    assert names == ["nu_identity", "nu_point_independence"]
    assert all(c.passed for c in context["checks"])


def test_offshell_block_reports_worst_draw():
    context = params_context(N=2, seed=7)
    execute_block(SuiteBlock(id="offshell", type="offshell", params={"draws": 5}), context)
    names = sorted(c.name for c in context["checks"])
    assert names == ["offshell_bra", "offshell_ket"]
    assert all(c.passed for c in context["checks"])


def test_scalar_trials_block_records_trials():
    context = params_context(N=1)
    execute_block(SuiteBlock(id="solve", type="solve"), context)
    execute_block(SuiteBlock(id="scalar_trials", type="scalar_trials", params={"trials": 3}), context)
    assert len(context["trial_records"]) == 3
    assert context["branch"] in (1, -1)
    assert any(c.name == "scalar_product" and c.passed for c in context["checks"])
