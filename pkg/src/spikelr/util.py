"""Shared plumbing: counter-based RNG streams and a deterministic parallel map.

All Monte Carlo in the package draws from Philox streams keyed by
(root seed, stream index). Worker count therefore never changes the numbers:
stream k produces the same values whether it runs on 1 thread or 8.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

# Philox accepts a 128-bit key; fold (seed, stream) into it so distinct
# streams never collide for distinct indices.
_STREAM_MOD = 1 << 64


def rng_stream(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator for the given (seed, stream) pair, independent across streams."""
    if seed < 0 or stream < 0:
        raise ValueError("seed and stream must be nonnegative")
    key = (int(seed) % _STREAM_MOD) * _STREAM_MOD + int(stream) % _STREAM_MOD
    return np.random.Generator(np.random.Philox(key=key))


def resolve_threads(threads: int | None) -> int:
    if threads is None or threads == 0:
        return max(1, os.cpu_count() or 1)
    if threads < 0:
        raise ValueError("threads must be >= 0")
    return threads


def deterministic_map(fn: Callable[[int], object], count: int,
                      threads: int | None = 1) -> list:
    """Evaluate fn(0..count-1), results in index order regardless of scheduling.

    fn must not share mutable state between indices; each index should draw
    from its own rng_stream. With threads > 1 the heavy numpy calls release
    the GIL, so this parallelizes eigendecompositions and quadratures.
    """
    nthreads = resolve_threads(threads)
    if nthreads <= 1 or count <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        return list(pool.map(fn, range(count)))


def chunk_sizes(total: int, chunk: int) -> Sequence[tuple[int, int]]:
    """(offset, size) pairs covering range(total) in blocks of at most chunk."""
    out = []
    done = 0
    while done < total:
        b = min(chunk, total - done)
        out.append((done, b))
        done += b
    return out
