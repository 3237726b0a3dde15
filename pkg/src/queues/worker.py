"""
Bounded worker pool.

Runs blocking jobs in threads through asyncio, at most `limit` at a time.

Author : Coke
Date   : 2025-06-12
"""

import asyncio
import logging
from typing import Callable, Sequence, TypeVar

from src.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")


async def gather_bounded(jobs: Sequence[Callable[[], T]], limit: int | None = None) -> list[T]:
    """
    Run the jobs concurrently in worker threads and collect their results.

    Args:
        jobs (Sequence[Callable[[], T]]): Blocking zero-argument callables.
        limit (int | None): Largest number of jobs in flight, settings.THREADS by default.

    Returns:
        list[T]: Results in submission order, whatever the completion order.
    """
    limit = limit or settings.THREADS
    semaphore = asyncio.Semaphore(limit)

    async def _run(index: int, job: Callable[[], T]) -> T:
        async with semaphore:
            logger.debug("job %d/%d started", index + 1, len(jobs))
            return await asyncio.to_thread(job)

    return list(await asyncio.gather(*(_run(i, job) for i, job in enumerate(jobs))))


def run_bounded(jobs: Sequence[Callable[[], T]], limit: int | None = None) -> list[T]:
    """Blocking entry point of gather_bounded."""
    return asyncio.run(gather_bounded(jobs, limit))
