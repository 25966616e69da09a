"""Order-preserving worker map; output bytes never depend on the worker count."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: int) -> int:
    """0 means all cores; otherwise the given positive count."""
    if jobs < 0:
        raise ValueError("jobs must be >= 0")
    if jobs == 0:
        return os.cpu_count() or 1
    return jobs


def ordered_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    data = list(items)
    workers = resolve_jobs(jobs)
    if workers == 1 or len(data) < 2:
        return [fn(x) for x in data]
    chunk = max(1, len(data) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, data, chunksize=chunk))
