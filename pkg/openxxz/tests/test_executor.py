import pytest

from openxxz.orchestrator.executor import SuiteExecutor
from openxxz.schemas.pipeline import SuiteBlock


def block(id, inputs=()):
    return SuiteBlock(id=id, type=id, inputs=list(inputs))


def test_execution_order_respects_inputs():
    executor = SuiteExecutor([
        block("scalar_trials", ["solve"]),
        block("solve", ["params"]),
        block("params"),
        block("nu_identity", ["params"]),
    ])
    executor.build_graph()
    order = executor.get_execution_order()
    assert order.index("params") < order.index("solve") < order.index("scalar_trials")
    assert order.index("params") < order.index("nu_identity")


def test_execution_order_is_deterministic():
    blocks = [block("params"), block("yang_baxter", ["params"]), block("reflection", ["params"])]
    executor = SuiteExecutor(blocks)
    executor.build_graph()
    assert executor.get_execution_order() == ["params", "reflection", "yang_baxter"]


def test_unknown_input_rejected():
    executor = SuiteExecutor([block("solve", ["params"])])
    with pytest.raises(ValueError, match="unknown input 'params'"):
        executor.build_graph()


def test_cycle_rejected():
    executor = SuiteExecutor([block("a", ["b"]), block("b", ["a"])])
    with pytest.raises(ValueError, match="cycles"):
        executor.build_graph()


def test_duplicate_ids_rejected():
    with pytest.raises(ValueError):
        SuiteExecutor([block("params"), block("params")])
