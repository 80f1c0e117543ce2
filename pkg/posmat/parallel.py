"""Running independent sub-searches in worker processes."""

import logging
from multiprocessing import Pool

logger = logging.getLogger(__name__)


def map_jobs(function, items, jobs=1):
    """``[function(item) for item in items]``, computed by ``jobs`` worker
    processes when jobs > 1. Results keep the order of ``items``, so the
    output never depends on the number of workers.

    ``function`` and the items must be picklable (module-level functions,
    ``functools.partial`` of them).
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    workers = min(jobs, len(items))
    logger.debug("dispatching %d jobs to %d workers", len(items), workers)
    with Pool(workers) as pool:
        return pool.map(function, items)
