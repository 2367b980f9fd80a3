from openxxz.orchestrator.dispatcher import execute_block
from openxxz.orchestrator.executor import SuiteExecutor
from openxxz.utils.logger import logger


def run_pipeline(blocks, context=None):
    executor = SuiteExecutor(blocks)
    executor.build_graph()

    context = {} if context is None else context
    execution_order = executor.get_execution_order()

    logger.info(f"Execution order: {execution_order}")

    for block_id in execution_order:
        block = executor.block_map[block_id]
        logger.info(f"Executing suite: {block_id} (type: {block.type})")
        execute_block(block, context)
        logger.info(f"Completed suite: {block_id}")

    return context
