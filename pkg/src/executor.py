import asyncio
from functools import partial
from typing import Any, Callable, Dict

from src.log import logger


async def execute_task(func: Callable[..., Any], *args, **kwargs) -> Any:
    """Run a CPU-bound analysis in the loop's default executor."""
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, partial(func, *args, **kwargs))


async def execute_tasks(tasks: Dict[str, Callable[[], Any]]) -> Dict[str, Any]:
    """
    Run independent analyses concurrently and collect their results by name.

    The first failure is re-raised after every task has finished, so results are
    independent of scheduling order.
    """
    names = list(tasks.keys())
    results = await asyncio.gather(
        *[execute_task(tasks[name]) for name in names],
        return_exceptions=True,
    )

    combined_results = {}
    for name, result in zip(names, results):
        if isinstance(result, BaseException):
            logger.error(f"TASK_FAILED | task={name} | Error={type(result).__name__}: {result}")
            raise result
        combined_results[name] = result

    return combined_results
