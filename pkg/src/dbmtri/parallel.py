"""Deterministic chunk scheduling for Monte Carlo sample loops.

Samples are split into fixed-size chunks; each chunk derives its sample
seeds from the master seed by index, and chunk results are combined in
index order.  Outputs are therefore bit-identical for any worker count,
and threads only change wall time (the compiled kernels and BLAS release
the GIL).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from .rng import CHUNK_SAMPLES, chunk_ranges


def resolve_threads(flag: int | None = None, sequential: bool = False) -> int:
    """Thread count: --threads flag beats DBM_THREADS beats cpu count."""
    if sequential:
        return 1
    if flag is not None:
        if flag < 1:
            raise ValueError("thread count must be >= 1")
        return flag
    env = os.environ.get("DBM_THREADS", "").strip()
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("DBM_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def map_chunks(samples: int, worker, threads: int = 1, chunk: int = CHUNK_SAMPLES) -> list:
    """worker(lo, hi) over sample chunks; results in chunk order."""
    ranges = chunk_ranges(samples, chunk)
    if threads <= 1:
        return [worker(lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda r: worker(r[0], r[1]), ranges))
