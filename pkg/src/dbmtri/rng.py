"""Counter-based seed derivation for reproducible parallel Monte Carlo.

Every sampled object (path, matrix, replicate) gets its generator from
``derive_rng(master_seed, index)``.  The derivation is a pure function of
(master_seed, index) via SeedSequence spawn keys, so sample i is bit-identical
no matter which worker produces it or in what order.

SFC64 is used as the bit generator: it benchmarked about 1.4x faster than
PCG64 for standard normals, and noise generation dominates the matrix path
experiments.  Any SeedSequence-compatible generator would work.
"""

from __future__ import annotations

import numpy as np

BitGen = np.random.SFC64


def derive_seedseq(master_seed: int, *path: int) -> np.random.SeedSequence:
    """SeedSequence for a node in the (master_seed, i, j, ...) derivation tree."""
    return np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(path))


def derive_rng(master_seed: int, *path: int) -> np.random.Generator:
    """Independent generator addressed by integers, e.g. derive_rng(seed, sample_idx)."""
    return np.random.Generator(BitGen(derive_seedseq(master_seed, *path)))


def as_rng(seed, *path: int) -> np.random.Generator:
    """Pass a ready Generator through unchanged, else derive one from the seed."""
    if isinstance(seed, np.random.Generator):
        return seed
    return derive_rng(seed, *path)


# Samples are processed in fixed-size chunks and chunk results merged in chunk
# order, so estimator outputs do not depend on the worker count.  The chunk
# size is a constant of the scheme, not a tuning knob: changing it changes
# which partial sums get formed first and therefore the last floating point
# bits of merged results.
CHUNK_SAMPLES = 64


def chunk_ranges(n_samples: int, chunk: int = CHUNK_SAMPLES) -> list[tuple[int, int]]:
    """[(lo, hi)) sample-index ranges covering range(n_samples) in order."""
    if n_samples < 0:
        raise ValueError(f"n_samples must be >= 0, got {n_samples}")
    return [(lo, min(lo + chunk, n_samples)) for lo in range(0, n_samples, chunk)]
