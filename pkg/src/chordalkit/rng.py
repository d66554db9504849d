"""Seeded randomness for the whole package.

Every stochastic feature (generators, seeded tie-breaking, fuzz corpora)
draws from one fixed, named 64-bit generator: Philox4x64-10, as provided by
``numpy.random.Philox``. A stream is identified by ``(seed, label)``; the
pair is folded into the Philox key with splitmix64, so independent features
fed the same user seed still get decorrelated streams, and a given
``(seed, label)`` pair yields the same sequence on every run and platform.
"""

from __future__ import annotations

import numpy as np

from ._bitops import label_hash, mix64


def stream(seed: int, label: str = "") -> np.random.Generator:
    """Return the Philox stream for this (seed, label) pair."""
    key = mix64(int(seed), label_hash(label))
    return np.random.Generator(np.random.Philox(key=key))


def substream_seed(seed: int, label: str, index: int) -> int:
    """Derive a child seed, for features that need many related streams."""
    return mix64(int(seed), label_hash(label), int(index))
