import pytest

from openxxz.orchestrator.pipelines import COMMAND_PIPELINES, build_pipeline
from openxxz.orchestrator.run_pipeline import run_pipeline
from openxxz.schemas.pipeline import COMMANDS, RunConfig


def test_every_command_has_a_pipeline():
    assert set(COMMAND_PIPELINES) == set(COMMANDS)


def test_pipeline_threads_run_options():
    config = RunConfig(command="scalar-product", seed=5, N=3, trials=7, n_jobs=2)
    blocks = {b.id: b for b in build_pipeline(config)}
    assert blocks["params"].params == {"seed": 5, "N": 3, "mode": "inhomogeneous", "precision": "double"}
    assert blocks["scalar_trials"].params == {"trials": 7, "n_jobs": 2}
    assert blocks["scalar_trials"].inputs == ["solve"]


def test_full_report_contains_every_suite():
    blocks = build_pipeline(RunConfig(command="full-report"))
    types = {b.type for b in blocks}
    for command in COMMANDS:
        assert {b.type for b in build_pipeline(RunConfig(command=command))} <= types


def test_verify_axioms_pipeline():
    context = run_pipeline(build_pipeline(RunConfig(command="verify-axioms", N=3, seed=7)))
    families = {c.family for c in context["checks"]}
    assert families == {"yang_baxter", "reflection", "dual_reflection", "commutativity", "crossing", "hamiltonian"}
    assert all(c.passed for c in context["checks"]), [(c.name, c.value) for c in context["checks"]]


def test_solve_pipeline_single_site():
    context = run_pipeline(build_pipeline(RunConfig(command="solve", N=1, seed=11)))
    assert len(context["roots"]) == 2
    assert all(c.passed for c in context["checks"] if c.hard)


def test_run_config_rejects_empty_chain():
    with pytest.raises(ValueError, match="N must lie in"):
        RunConfig(command="solve", N=0)


def test_run_config_rejects_zero_trials():
    with pytest.raises(ValueError):
        RunConfig(command="scalar-product", trials=0)
