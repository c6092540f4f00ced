"""Deterministic random-number streams.

Every random draw in the toolkit flows through one 64-bit seed.  Streams
are derived with a counter-based Philox generator keyed by the seed plus
an integer stream key, so the pair (seed, key) always reproduces the same
draws regardless of how many other streams were consumed before it.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

_MAX_SEED = 2**64


def rng_for(seed: int, *stream: int) -> np.random.Generator:
    """Return the generator for the stream identified by (seed, *stream)."""
    seed = int(seed)
    if not 0 <= seed < _MAX_SEED:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    ss = np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.Philox(ss))
