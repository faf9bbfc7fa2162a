"""Deterministic RNG stream derivation.

All randomized code takes a 64-bit master seed and derives independent
substreams through SeedSequence spawn keys.  A stream is addressed by an
integer path, so adding copies (e.g. doubling the sketch count) never
perturbs existing streams.
"""

from __future__ import annotations

import numpy as np

# stream namespaces
SKETCH_KEYS = 1
CANDIDATES = 2
ESTIMATOR = 3
GENERATOR = 4
DEMO = 5


def substream(seed: int, *path: int) -> np.random.Generator:
    """Generator for the substream addressed by `path` under `seed`."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(path)))


def normalize_seed(seed) -> int:
    """Coerce a user-supplied seed to a nonnegative 64-bit int."""
    s = int(seed)
    return s & 0xFFFFFFFFFFFFFFFF
