"""Fan pure work items out to worker processes through asyncio."""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Any, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


async def gather_in_processes(
    fn: Callable[..., T],
    arg_tuples: Sequence[tuple[Any, ...]],
    workers: int,
    cancel_on_failure: bool = True,
) -> list[T]:
    """Run ``fn(*args)`` for every args tuple in a process pool.

    Results come back in input order. With ``cancel_on_failure`` the first
    exception cancels the remaining work and is re-raised.
    """
    if not arg_tuples:
        return []
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tasks = [asyncio.ensure_future(loop.run_in_executor(pool, fn, *args)) for args in arg_tuples]
        logger.debug("Dispatched %d work items to %d workers", len(tasks), workers)

        if not cancel_on_failure:
            return list(await asyncio.gather(*tasks))

        results: list[Any] = [None] * len(tasks)
        index_map = {task: idx for idx, task in enumerate(tasks)}
        done, pending = await asyncio.wait(tasks, return_when=asyncio.FIRST_EXCEPTION)

        for task in done:
            exc = task.exception()
            if exc:
                for pending_task in pending:
                    pending_task.cancel()
                await asyncio.gather(*pending, return_exceptions=True)
                raise exc
            results[index_map[task]] = task.result()

        if pending:
            for task, result in zip(pending, await asyncio.gather(*pending)):
                results[index_map[task]] = result
        return results


def run_parallel(fn: Callable[..., T], arg_tuples: Sequence[tuple[Any, ...]], workers: int = 1) -> list[T]:
    """Synchronous entry point; one worker runs inline without a pool."""
    if workers <= 1:
        return [fn(*args) for args in arg_tuples]
    return asyncio.run(gather_in_processes(fn, arg_tuples, workers))
