"""Deterministic parallel-map hook for exhaustive verification loops."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar

from ..config import config

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], jobs: Optional[int] = None) -> List[R]:
    """
    Apply ``func`` to every item, preserving input order in the result.

    Args:
        func: Pure function of one argument.
        items: Work items.
        jobs: Worker count; defaults to the configured value. ``1`` runs inline.

    Returns:
        Results in the same order as ``items``.
    """
    items = list(items)
    workers = config.jobs if jobs is None else jobs
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug(f"Mapping {len(items)} chunks over {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def chunked(count: int, size: int) -> List[range]:
    """Split ``range(count)`` into consecutive ranges of at most ``size``."""
    size = max(1, size)
    return [range(start, min(start + size, count)) for start in range(0, count, size)]


def first_hit(results: Sequence[Optional[R]]) -> Optional[R]:
    """First non-None result, so the reported witness is partition-independent."""
    for result in results:
        if result is not None:
            return result
    return None
