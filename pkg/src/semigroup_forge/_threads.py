"""Worker-count policy for the level-parallel searches.

SEMIGROUP_FORGE_THREADS picks the pool size; unset or 1 means serial.
Results are merged in input order either way, so the thread count never
changes what a search returns.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count() -> int:
    raw = os.environ.get("SEMIGROUP_FORGE_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def ordered_map(fn, items, workers: int | None = None) -> list:
    """Apply fn to each item, preserving input order in the result list."""
    if workers is None:
        workers = thread_count()
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
