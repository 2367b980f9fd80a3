from openxxz.operators.checks import (
    execute_hamiltonian_block,
    execute_reflection_block,
    execute_transfer_block,
    execute_yang_baxter_block,
)
from openxxz.params.sampling import execute_params_block
from openxxz.scalar.asymptotics import execute_scalar_asymptotics_block
from openxxz.scalar.determinants import execute_determinant_routes_block
from openxxz.scalar.formula import execute_nu_identity_block
from openxxz.scalar.system import execute_linear_system_block
from openxxz.scalar.trials import execute_scalar_trials_block
from openxxz.spectral.solver import execute_solve_block
from openxxz.utils.logger import logger
from openxxz.vectors.asymptotics import execute_operator_asymptotics_block
from openxxz.vectors.offshell import execute_offshell_block


SUITE_EXECUTORS = {
    "params": execute_params_block,
    "yang_baxter": execute_yang_baxter_block,
    "reflection": execute_reflection_block,
    "transfer_family": execute_transfer_block,
    "hamiltonian": execute_hamiltonian_block,
    "solve": execute_solve_block,
    "offshell": execute_offshell_block,
    "operator_asymptotics": execute_operator_asymptotics_block,
    "nu_identity": execute_nu_identity_block,
    "linear_system": execute_linear_system_block,
    "determinant_routes": execute_determinant_routes_block,
    "scalar_trials": execute_scalar_trials_block,
    "scalar_asymptotics": execute_scalar_asymptotics_block,
}

# Context keys each suite reads
SUITE_REQUIREMENTS = {
    "params": [],
    "yang_baxter": ["seed", "checks"],
    "reflection": ["params", "seed", "checks"],
    "transfer_family": ["params", "seed", "checks"],
    "hamiltonian": ["params", "checks"],
    "solve": ["ctx", "seed", "checks"],
    "offshell": ["params", "ctx", "dtype", "seed", "checks"],
    "operator_asymptotics": ["params", "dtype", "checks"],
    "nu_identity": ["params", "checks"],
    "linear_system": ["params", "ctx", "roots", "seed", "checks"],
    "determinant_routes": ["params", "ctx", "roots", "seed", "checks"],
    "scalar_trials": ["params", "ctx", "dtype", "roots", "seed", "checks"],
    "scalar_asymptotics": ["params", "dtype", "roots", "checks"],
}


def execute_block(block, context):
    block_type = block.type

    if block_type not in SUITE_EXECUTORS:
        raise ValueError(f"Unknown suite type: {block_type}")

    # Validate required context keys before execution
    required_keys = SUITE_REQUIREMENTS.get(block_type, [])
    missing_keys = [key for key in required_keys if key not in context]

    if missing_keys:
        raise ValueError(
            f"Suite '{block.id}' (type: {block_type}) is missing required inputs: {missing_keys}. "
            f"Ensure upstream suites are connected and executed first."
        )

    try:
        SUITE_EXECUTORS[block_type](block, context)
    except KeyError as e:
        raise ValueError(
            f"Suite '{block.id}' failed: missing context key {e}. "
            f"Check that upstream suites produce the required outputs."
        )
    except Exception as e:
        logger.error(f"Suite '{block.id}' failed with error: {e}")
        raise ValueError(f"Suite '{block.id}' (type: {block_type}) failed: {str(e)}")
