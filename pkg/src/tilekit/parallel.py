"""Deterministic process-pool map."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("TILEKIT_WORKERS", "1"))
    return max(1, workers)


def pmap(func, items, workers: int | None = None, chunksize: int = 64) -> list:
    """``list(map(func, items))``, optionally spread over worker processes.

    Results keep input order, so output never depends on the worker count.
    """
    items = list(items)
    workers = resolve_workers(workers)
    if workers == 1 or len(items) < 2 * chunksize:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(func, items, chunksize=chunksize))
