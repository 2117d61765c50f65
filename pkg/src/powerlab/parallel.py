"""Optional process-level parallelism for corpus sweeps.

``POWERLAB_THREADS`` caps the number of worker processes (default 1, i.e.
run inline). Results always come back in input order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, Optional, TypeVar

from .errors import InvalidInputError

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "POWERLAB_THREADS"


def worker_count(env: Optional[dict] = None) -> int:
    raw = (os.environ if env is None else env).get(ENV_VAR)
    if raw is None or raw == "":
        return 1
    try:
        k = int(raw)
    except ValueError:
        k = 0
    if k < 1:
        raise InvalidInputError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
    return k


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> Iterator[R]:
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items, chunksize=16)
