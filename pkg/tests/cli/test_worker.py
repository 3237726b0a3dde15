"""
Worker pool testcase.

Author : Coke
Date   : 2025-06-17
"""

import threading
import time
from functools import partial

from src.queues.worker import gather_bounded, run_bounded


class Tracker:
    """Records the largest number of jobs running at once."""

    def __init__(self) -> None:
        self.lock = threading.Lock()
        self.active = 0
        self.peak = 0

    def job(self, index: int, seconds: float) -> int:
        with self.lock:
            self.active += 1
            self.peak = max(self.peak, self.active)
        time.sleep(seconds)
        with self.lock:
            self.active -= 1
        return index


async def test_results_keep_submission_order() -> None:
    tracker = Tracker()
    jobs = [partial(tracker.job, i, 0.02 * (5 - i)) for i in range(5)]
    assert await gather_bounded(jobs, limit=5) == [0, 1, 2, 3, 4]


async def test_concurrency_limit() -> None:
    tracker = Tracker()
    jobs = [partial(tracker.job, i, 0.01) for i in range(8)]
    assert await gather_bounded(jobs, limit=2) == list(range(8))
    assert 1 <= tracker.peak <= 2


def test_blocking_entry_point() -> None:
    assert run_bounded([partial(pow, 2, k) for k in range(4)], limit=1) == [1, 2, 4, 8]
    assert run_bounded([]) == []
