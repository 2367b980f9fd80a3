"""Preset suite graphs for each CLI command."""
from openxxz.schemas.pipeline import SuiteBlock

_AXIOMS = [
    ("yang_baxter", ["params"]),
    ("reflection", ["params"]),
    ("transfer_family", ["params"]),
    ("hamiltonian", ["params"]),
]
_SOLVE = [("solve", ["params"])]
_SCALAR = [
    ("offshell", ["solve"]),
    ("linear_system", ["solve"]),
    ("determinant_routes", ["solve"]),
    ("scalar_trials", ["solve"]),
]
_ASYMPTOTICS = [
    ("operator_asymptotics", ["params"]),
    ("nu_identity", ["params"]),
    ("scalar_asymptotics", ["solve"]),
]

COMMAND_PIPELINES = {
    "verify-axioms": _AXIOMS,
    "solve": _SOLVE,
    "scalar-product": _SOLVE + _SCALAR,
    "asymptotics": _SOLVE + _ASYMPTOTICS,
    "full-report": _AXIOMS + _SOLVE + _SCALAR + _ASYMPTOTICS,
}


def build_pipeline(config):
    """SuiteBlocks for config.command, with the run options threaded into the
    suites that read them."""
    if config.command not in COMMAND_PIPELINES:
        raise ValueError(f"Unknown command: {config.command}")

    block_params = {
        "params": {"seed": config.seed, "N": config.N, "mode": config.mode, "precision": config.precision},
        "scalar_trials": {"trials": config.trials, "n_jobs": config.n_jobs},
    }
    blocks = [SuiteBlock(id="params", type="params", params=block_params["params"])]
    for suite, inputs in COMMAND_PIPELINES[config.command]:
        blocks.append(SuiteBlock(id=suite, type=suite, params=block_params.get(suite, {}), inputs=inputs))
    return blocks
