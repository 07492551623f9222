#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Thread-count resolution and an order-preserving parallel map
"""
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

import psutil

logger = logging.getLogger(__name__)

THREADS_ENV = "COLLAPSAR_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def resolve_thread_count(configured: Optional[int] = None) -> int:
    """Worker count: configured or CPU count, capped by COLLAPSAR_THREADS"""
    count = configured or psutil.cpu_count(logical=True) or 1
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            logger.warning("Ignoring %s=%r: not an integer", THREADS_ENV, raw)
        else:
            count = min(count, max(1, cap))
    return max(1, count)


def ordered_map(fn: Callable[[T], R], items: Iterable[T],
                threads: Optional[int] = None) -> List[R]:
    """Map fn over items, results in input order"""
    items = list(items)
    workers = resolve_thread_count(threads)
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
