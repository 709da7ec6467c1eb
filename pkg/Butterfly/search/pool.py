# Butterfly/search/pool.py

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Sequence, Tuple

from Butterfly.utils.logger import logger

# branches handed to each worker slot during the last run
work_loads = {}


async def run_branches(fn: Callable[..., Any], jobs: Sequence[Tuple], workers: int) -> List[Any]:
    """Run ``fn(*job)`` for every job and return the results in job order.

    With one worker the jobs run in this process; otherwise they are spread
    over a process pool. Workers never log; the caller logs per result.
    """
    work_loads.clear()
    if workers <= 1 or len(jobs) <= 1:
        work_loads[0] = len(jobs)
        results = []
        for job in jobs:
            results.append(fn(*job))
            await asyncio.sleep(0)
        return results

    loop = asyncio.get_running_loop()
    slots = min(workers, len(jobs))
    for index in range(len(jobs)):
        work_loads[index % slots] = work_loads.get(index % slots, 0) + 1
    with ProcessPoolExecutor(max_workers=slots) as executor:
        try:
            return await asyncio.gather(*[loop.run_in_executor(executor, fn, *job) for job in jobs])
        except Exception as e:
            logger.error(f"Worker pool failed: {e}", exc_info=True)
            raise
