"""Seeding helpers.

Every stochastic routine draws from a :class:`numpy.random.Generator` backed
by PCG64 (128-bit state permuted congruential generator).  Integer seeds go
through :class:`numpy.random.SeedSequence`, so a given seed reproduces the
same stream on every platform; independent child streams for replicas or
walker batches come from ``SeedSequence.spawn``.
"""

from __future__ import annotations

import numpy as np

DEFAULT_SEED = 20240101


def make_rng(seed=None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        seed = DEFAULT_SEED
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))


def spawn_seeds(seed, count: int) -> list[np.random.SeedSequence]:
    """``count`` independent child seed sequences derived from ``seed``."""
    if seed is None:
        seed = DEFAULT_SEED
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(int(seed))
    return seed.spawn(count)
